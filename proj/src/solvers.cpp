#include "sbesbh/solvers.hpp"

#include <algorithm>
#include <stdexcept>

#include "sbesbh/bucket_queue.hpp"

namespace sbesbh {

using Vertex = HybridizationGraph::Vertex;

Algorithm parse_algorithm(std::string_view name) {
  if (name == "seq") return Algorithm::Sequential;
  if (name == "minprimer") return Algorithm::MinPrimer;
  if (name == "minprobe") return Algorithm::MinProbe;
  throw ConfigError("unknown algorithm '" + std::string(name) + "' (expected seq, minprimer or minprobe)");
}

const char* algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Sequential: return "seq";
    case Algorithm::MinPrimer: return "minprimer";
    case Algorithm::MinProbe: return "minprobe";
  }
  return "?";
}

DegreeMode parse_degree_mode(std::string_view name) {
  if (name == "total") return DegreeMode::Total;
  if (name == "positive") return DegreeMode::PositiveOnly;
  throw ConfigError("unknown degree mode '" + std::string(name) + "' (expected total or positive)");
}

const char* degree_mode_name(DegreeMode m) noexcept { return m == DegreeMode::Total ? "total" : "positive"; }

DesignResult sequential_greedy(const ProblemInstance& instance) {
  const HybridizationGraph g(instance);
  const auto r = static_cast<std::uint32_t>(instance.redundancy());

  // Per probe: selected primers whose extended spectrum holds it, how many of
  // those hold it unextended, and the sum of their indices (the owner when
  // the cover is 1).
  std::vector<std::uint32_t> cover(g.probe_count(), 0), pos_cover(g.probe_count(), 0);
  std::vector<std::uint64_t> owner_sum(g.probe_count(), 0);
  std::vector<std::uint32_t> informative(g.primer_count(), 0), loss(g.primer_count(), 0);
  std::vector<Vertex> hurt;
  std::vector<Vertex> chosen;

  auto sole_informative_owner = [&](Vertex x) -> std::optional<Vertex> {
    if (cover[x] == 1 && pos_cover[x] == 1) return static_cast<Vertex>(owner_sum[x]);
    return std::nullopt;
  };

  for (const Pool& pool : instance.pools()) {
    for (Vertex p : g.pool_primers(pool.id)) {
      std::uint32_t own = 0;
      for (Vertex x : g.primer_pos(p)) own += cover[x] == 0;
      if (own < r) continue;

      hurt.clear();
      auto charge = [&](Vertex x) {
        if (auto owner = sole_informative_owner(x)) {
          if (loss[*owner]++ == 0) hurt.push_back(*owner);
        }
      };
      for (Vertex x : g.primer_pos(p)) charge(x);
      for (Vertex x : g.primer_neg(p)) charge(x);
      bool feasible = true;
      for (Vertex s : hurt) {
        if (informative[s] - loss[s] < r) feasible = false;
        loss[s] = 0;
      }
      if (!feasible) continue;

      auto absorb = [&](Vertex x, bool positive) {
        if (auto owner = sole_informative_owner(x)) --informative[*owner];
        ++cover[x];
        owner_sum[x] += p;
        if (positive) ++pos_cover[x];
      };
      for (Vertex x : g.primer_pos(p)) absorb(x, true);
      for (Vertex x : g.primer_neg(p)) absorb(x, false);
      informative[p] = own;
      chosen.push_back(p);
      break;
    }
  }

  DesignResult result;
  for (Vertex p : chosen) {
    Selection s{g.primer_ref(p).pool_id, g.primer_ref(p).primer_index, {}};
    for (Vertex x : g.primer_pos(p)) {
      if (s.witnesses.size() == r) break;
      if (cover[x] == 1) s.witnesses.push_back(g.probe_id(x));
    }
    result.selected.push_back(std::move(s));
  }
  result.fingerprint = instance.fingerprint();
  result.pruned_primers = g.empty_spectrum_primers();
  result.normalize();
  return result;
}

namespace {

/// Shared selection step of the two min-degree heuristics.
class MinDegreeRun {
 public:
  MinDegreeRun(const ProblemInstance& instance, DegreeMode mode) : g_(instance), mode_(mode) {
    g_.enforce_invariants();
    g_.drain_touched_primers();
    g_.drain_touched_probes();
  }

  HybridizationGraph& graph() { return g_; }
  DegreeMode mode() const { return mode_; }

  void select(Vertex p) {
    const auto r = static_cast<std::size_t>(g_.redundancy());
    for (Vertex q : g_.pool_primers(g_.primer_ref(p).pool_id)) {
      if (q != p && g_.primer_live(q)) g_.remove_primer(q);
    }

    // Witnesses: the r lowest-degree live N+ probes, order frozen here.
    std::vector<std::pair<std::uint32_t, Vertex>> ranked;
    for (Vertex x : g_.primer_pos(p)) {
      if (g_.probe_live(x)) ranked.emplace_back(g_.probe_degree(x, mode_), x);
    }
    std::sort(ranked.begin(), ranked.end());
    ranked.resize(std::min(ranked.size(), r));

    for (auto [deg, w] : ranked) {
      for (auto side : {g_.probe_pos(w), g_.probe_neg(w)}) {
        for (Vertex q : side) {
          if (q != p && g_.primer_live(q)) g_.remove_primer(q);
        }
      }
    }
    g_.retire_primer(p);
    Selection sel{g_.primer_ref(p).pool_id, g_.primer_ref(p).primer_index, {}};
    for (auto [deg, w] : ranked) {
      g_.delete_probe(w);
      sel.witnesses.push_back(g_.probe_id(w));
    }
    for (auto side : {g_.primer_pos(p), g_.primer_neg(p)}) {
      for (Vertex x : side) {
        if (g_.probe_live(x)) g_.remove_probe(x);
      }
    }
    result_.selected.push_back(std::move(sel));
  }

  DesignResult finish(const ProblemInstance& instance) {
    result_.fingerprint = instance.fingerprint();
    result_.pruned_primers = g_.empty_spectrum_primers();
    result_.normalize();
    return std::move(result_);
  }

 private:
  HybridizationGraph g_;
  DegreeMode mode_;
  DesignResult result_;
};

}  // namespace

DesignResult min_primer_greedy(const ProblemInstance& instance, DegreeMode mode) {
  MinDegreeRun run(instance, mode);
  HybridizationGraph& g = run.graph();
  BucketQueue queue;
  for (Vertex p = 0; p < g.primer_count(); ++p) {
    if (g.primer_live(p)) queue.push(g.primer_degree(p, mode), p);
  }
  auto current = [&](std::uint32_t key, Vertex p) { return g.primer_live(p) && g.primer_degree(p, mode) == key; };
  while (auto p = queue.pop_min(current)) {
    run.select(*p);
    for (Vertex q : g.drain_touched_primers()) {
      if (g.primer_live(q)) queue.push(g.primer_degree(q, mode), q);
    }
    g.drain_touched_probes();
  }
  return run.finish(instance);
}

DesignResult min_probe_greedy(const ProblemInstance& instance, DegreeMode mode) {
  MinDegreeRun run(instance, mode);
  HybridizationGraph& g = run.graph();
  BucketQueue queue;
  for (Vertex x = 0; x < g.probe_count(); ++x) {
    if (g.probe_live(x)) queue.push(g.probe_degree(x, mode), x);
  }
  auto current = [&](std::uint32_t key, Vertex x) { return g.probe_live(x) && g.probe_degree(x, mode) == key; };
  while (auto x = queue.pop_min(current)) {
    Vertex best = 0;
    std::uint32_t best_degree = 0;
    bool found = false;
    for (Vertex p : g.probe_pos(*x)) {
      if (!g.primer_live(p)) continue;
      const std::uint32_t d = g.primer_degree(p, mode);
      if (!found || d < best_degree) {
        best = p;
        best_degree = d;
        found = true;
      }
    }
    if (!found) throw std::logic_error("live probe without a live N+ primer");
    run.select(best);
    for (Vertex y : g.drain_touched_probes()) {
      if (g.probe_live(y)) queue.push(g.probe_degree(y, mode), y);
    }
    g.drain_touched_primers();
  }
  return run.finish(instance);
}

DesignResult solve(const ProblemInstance& instance, const SolverConfig& config) {
  switch (config.algorithm) {
    case Algorithm::Sequential: return sequential_greedy(instance);
    case Algorithm::MinPrimer: return min_primer_greedy(instance, config.degree_mode);
    case Algorithm::MinProbe: return min_probe_greedy(instance, config.degree_mode);
  }
  throw ConfigError("unknown algorithm");
}

}  // namespace sbesbh

#include "sbesbh/oracles.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <set>
#include <string>

namespace sbesbh {

void BipartiteGraph::validate() const {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (auto [u, v] : edges) {
    if (u >= left || v >= right) throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (!seen.insert({u, v}).second) {
      throw ParseError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
  }
}

std::vector<std::vector<std::uint32_t>> BipartiteGraph::left_neighbours() const {
  std::vector<std::vector<std::uint32_t>> adj(left);
  for (auto [u, v] : edges) adj[u].push_back(v);
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::size_t BipartiteGraph::max_degree() const {
  std::vector<std::size_t> du(left, 0), dv(right, 0);
  for (auto [u, v] : edges) {
    ++du[u];
    ++dv[v];
  }
  std::size_t m = 0;
  for (auto d : du) m = std::max(m, d);
  for (auto d : dv) m = std::max(m, d);
  return m;
}

std::size_t BipartiteGraph::min_degree() const {
  std::vector<std::size_t> du(left, 0), dv(right, 0);
  for (auto [u, v] : edges) {
    ++du[u];
    ++dv[v];
  }
  std::size_t m = SIZE_MAX;
  for (auto d : du) m = std::min(m, d);
  for (auto d : dv) m = std::min(m, d);
  return m == SIZE_MAX ? 0 : m;
}

BipartiteGraph read_edge_list(std::istream& in, const std::string& source) {
  BipartiteGraph g;
  std::string line;
  std::size_t line_no = 0;
  auto parse = [&](std::string_view text) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError(source + ":" + std::to_string(line_no) + ": invalid vertex index '" + std::string(text) + "'");
    }
    return value;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(source + ":" + std::to_string(line_no) + ": expected u<TAB>v");
    }
    const std::string_view view(line);
    const std::uint32_t u = parse(view.substr(0, tab));
    const std::uint32_t v = parse(view.substr(tab + 1));
    g.left = std::max<std::size_t>(g.left, u + 1);
    g.right = std::max<std::size_t>(g.right, v + 1);
    g.edges.emplace_back(u, v);
  }
  g.validate();
  return g;
}

namespace {

// Precomputed spectra for the exhaustive search; ids sorted ascending.
struct PrimerSpectra {
  std::vector<ProbeId> own;
  std::vector<ProbeId> extended;
};

}  // namespace

BruteForceResult brute_force_mdpsp(const ProblemInstance& instance, std::uint64_t cap) {
  const auto& pools = instance.pools();
  const std::size_t n = pools.size();
  std::uint64_t combos = 1;
  for (const Pool& pool : pools) {
    combos *= pool.primers.size() + 1;
    if (combos > cap) throw SizeError("brute-force MDPSP search space exceeds cap of " + std::to_string(cap));
  }

  std::vector<std::vector<PrimerSpectra>> spectra(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Primer& p : pools[i].primers) {
      spectra[i].push_back({instance.space().spectrum(p.sequence),
                            instance.space().extended_spectrum(p.sequence, p.extensions)});
    }
  }
  const auto r = static_cast<std::size_t>(instance.redundancy());

  // choice[i] == 0: pool i absent; otherwise primer choice[i]-1 represents it.
  std::vector<std::uint32_t> choice(n, 0), best_choice(n, 0);
  std::size_t best = 0;
  std::vector<ProbeId> all_ext;
  auto feasible = [&](const std::vector<std::uint32_t>& c) {
    all_ext.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i]) {
        const auto& ext = spectra[i][c[i] - 1].extended;
        all_ext.insert(all_ext.end(), ext.begin(), ext.end());
      }
    }
    std::sort(all_ext.begin(), all_ext.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (!c[i]) continue;
      std::size_t informative = 0;
      for (ProbeId x : spectra[i][c[i] - 1].own) {
        auto [lo, hi] = std::equal_range(all_ext.begin(), all_ext.end(), x);
        if (hi - lo == 1) ++informative;
      }
      if (informative < r) return false;
    }
    return true;
  };

  for (std::uint64_t step = 0; step < combos; ++step) {
    std::size_t size = 0;
    for (auto c : choice) size += c != 0;
    if (size > best && feasible(choice)) {
      best = size;
      best_choice = choice;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (++choice[i] <= pools[i].primers.size()) break;
      choice[i] = 0;
    }
  }

  BruteForceResult out;
  out.optimum = best;
  std::vector<Primer> reps;
  for (std::size_t i = 0; i < n; ++i) {
    if (best_choice[i]) reps.push_back(pools[i].primers[best_choice[i] - 1]);
  }
  const DecodabilityCheck check = check_strongly_r_decodable(reps, instance.redundancy(), instance.space());
  if (!check.decodable) throw std::logic_error("brute-force optimum failed the decodability check");
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!best_choice[i]) continue;
    out.witness.selected.push_back({static_cast<std::uint32_t>(i), best_choice[i] - 1, check.witnesses[k++]});
  }
  out.witness.fingerprint = instance.fingerprint();
  out.witness.normalize();
  return out;
}

std::size_t brute_force_mim(const BipartiteGraph& g) {
  if (g.left + g.right > 24) throw SizeError("brute-force MIM limited to 24 vertices");
  g.validate();
  std::vector<std::uint32_t> adj_u(g.left, 0), adj_v(g.right, 0);
  for (auto [u, v] : g.edges) {
    adj_u[u] |= 1u << v;
    adj_v[v] |= 1u << u;
  }
  const auto& edges = g.edges;
  std::size_t best = 0;

  // Chosen edges induce a matching iff no endpoint repeats and no graph edge
  // joins an endpoint of one chosen edge to an endpoint of another.
  auto search = [&](auto&& self, std::size_t next, std::uint32_t used_u, std::uint32_t used_v, std::size_t size) -> void {
    best = std::max(best, size);
    if (size + (edges.size() - next) <= best) return;
    for (std::size_t i = next; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if ((used_u >> u) & 1u || (used_v >> v) & 1u) continue;
      if (adj_u[u] & used_v || adj_v[v] & used_u) continue;
      self(self, i + 1, used_u | (1u << u), used_v | (1u << v), size + 1);
      if (size + (edges.size() - i - 1) <= best) return;
    }
  };
  search(search, 0, 0u, 0u, 0);
  return best;
}

ReductionOutput reduce_mim_to_mdpsp(const BipartiteGraph& g) {
  g.validate();
  const auto neighbours = g.left_neighbours();
  std::vector<std::size_t> right_degree(g.right, 0);
  for (auto [u, v] : g.edges) ++right_degree[v];
  for (std::size_t u = 0; u < g.left; ++u) {
    if (neighbours[u].empty()) throw ConfigError("left vertex " + std::to_string(u) + " is isolated");
    if (neighbours[u].size() > 3) throw ConfigError("left vertex " + std::to_string(u) + " has degree above 3");
  }
  for (std::size_t v = 0; v < g.right; ++v) {
    if (right_degree[v] == 0) throw ConfigError("right vertex " + std::to_string(v) + " is isolated");
  }

  int l = 1;
  while ((std::size_t{1} << l) < g.right) ++l;

  std::vector<DnaString> assignment;
  std::vector<DnaString> probes;
  for (std::size_t v = 0; v < g.right; ++v) {
    std::string word(static_cast<std::size_t>(l), 'A');
    for (int bit = 0; bit < l; ++bit) {
      if ((v >> (l - 1 - bit)) & 1u) word[static_cast<std::size_t>(bit)] = 'T';
    }
    assignment.emplace_back(word);
    probes.push_back(reverse_complement(assignment.back()));
  }

  std::vector<Pool> pools;
  BaseSet ext;
  ext.insert(Base::C);
  ext.insert(Base::G);
  for (std::size_t u = 0; u < g.left; ++u) {
    std::string seq;
    for (std::size_t i = 0; i < neighbours[u].size(); ++i) {
      if (i) seq.push_back('C');
      seq += assignment[neighbours[u][i]].str();
    }
    Pool pool;
    pool.id = static_cast<std::uint32_t>(u);
    pool.primers.push_back(Primer{DnaString(seq), ext, pool.id, Strand::Unspecified});
    pools.push_back(std::move(pool));
  }
  return ReductionOutput{ProblemInstance(std::move(pools), ProbeSpace::from_list(std::move(probes), "list:reduction"), 1), l,
                         std::move(assignment)};
}

}  // namespace sbesbh

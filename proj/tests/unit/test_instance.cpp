#include <sstream>

#include "doctest.h"
#include "naive.hpp"
#include "sbesbh/graph.hpp"
#include "sbesbh/instance.hpp"

using namespace sbesbh;

namespace {

std::vector<std::string> names(const HybridizationGraph& g, const ProbeSpace& space,
                               std::span<const HybridizationGraph::Vertex> xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(space.probe(g.probe_id(x)).str());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("instance") {

TEST_CASE("pool text round-trips") {
  const std::string text =
      "# comment\n"
      "0\t+\tACGTAC\tAG\n"
      "0\t-\tTTGCA\tCT\n"
      "1\t.\tGGGA\tACGT\n";
  std::istringstream in(text);
  const auto pools = read_pools(in);
  REQUIRE(pools.size() == 2);
  CHECK(pools[0].primers.size() == 2);
  CHECK(pools[0].primers[1].strand == Strand::Reverse);
  CHECK(pools[1].primers[0].extensions == BaseSet::all());
  std::istringstream again(pools_text(pools));
  CHECK(pools_text(read_pools(again)) == pools_text(pools));
}

TEST_CASE("malformed pool text is rejected with a line number") {
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    return read_pools(in, "t");
  };
  CHECK_THROWS_AS(bad("0\t+\tACGT\n"), ParseError);
  CHECK_THROWS_AS(bad("0\t+\tACNT\tA\n"), ParseError);
  CHECK_THROWS_AS(bad("1\t+\tACGT\tA\n"), ParseError);
  CHECK_THROWS_AS(bad("0\t+\tACGT\tA\n0\t+\tACGA\tA\n"), ParseError);
  CHECK_THROWS_AS(bad("0\t+\tACGT\t\n"), ParseError);
  try {
    bad("0\t+\tACGT\tA\nx\t+\tA\tA\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("t:2") != std::string::npos);
  }
}

TEST_CASE("instance validation and fingerprint") {
  auto pools = naive::single_primer_pools({{"ACGT", "A"}, {"GGCC", "T"}});
  CHECK_THROWS(ProblemInstance(pools, ProbeSpace::kmers(2), 0));
  const ProblemInstance a(pools, ProbeSpace::kmers(2), 1);
  const ProblemInstance b(pools, ProbeSpace::kmers(3), 2);
  CHECK(a.fingerprint() == b.fingerprint());
  CHECK(a.fingerprint().size() == 16);
  pools[1].primers[0].extensions = BaseSet::parse("C");
  CHECK(ProblemInstance(pools, ProbeSpace::kmers(2), 1).fingerprint() != a.fingerprint());
  CHECK(a.primer_count() == 2);
  CHECK(a.ref_of(1).pool_id == 1);
}

TEST_CASE("sub-instances renumber pools") {
  const auto pools = naive::single_primer_pools({{"ACGT", "A"}, {"GGCC", "T"}, {"TTTT", "G"}});
  const ProblemInstance inst(pools, ProbeSpace::kmers(2), 1);
  const SubInstance sub = subinstance(inst, {2, 0});
  CHECK(sub.instance.pool_count() == 2);
  CHECK(sub.original_ids == std::vector<std::uint32_t>{2, 0});
  CHECK(sub.instance.pools()[0].primers[0].sequence.str() == "TTTT");
  CHECK(sub.instance.pools()[0].primers[0].pool_id == 0);
}

}

TEST_SUITE("graph") {

TEST_CASE("adjacency example") {
  const ProblemInstance inst(naive::single_primer_pools({{"ACG", "T"}}), ProbeSpace::kmers(2), 1);
  const HybridizationGraph g(inst);
  CHECK(names(g, inst.space(), g.primer_pos(0)) == std::vector<std::string>{"CG", "GT"});
  CHECK(names(g, inst.space(), g.primer_neg(0)) == std::vector<std::string>{"AC"});
  CHECK(g.primer_degree(0) == 3);
  CHECK(g.primer_degree(0, DegreeMode::PositiveOnly) == 2);
}

TEST_CASE("empty instance") {
  const ProblemInstance inst({}, ProbeSpace::kmers(2), 1);
  const HybridizationGraph g(inst);
  CHECK(g.primer_count() == 0);
  CHECK(g.probe_count() == 0);
}

TEST_CASE("identical primers have identical neighbourhoods") {
  const ProblemInstance inst(naive::single_primer_pools({{"ACGTT", "AG"}, {"ACGTT", "AG"}}), ProbeSpace::kmers(2), 1);
  const HybridizationGraph g(inst);
  CHECK(std::ranges::equal(g.primer_pos(0), g.primer_pos(1)));
  CHECK(std::ranges::equal(g.primer_neg(0), g.primer_neg(1)));
}

TEST_CASE("cascade rules") {
  // Probe GT only hybridizes to primer 0; removing primer 0 removes it.
  const ProblemInstance inst(naive::single_primer_pools({{"ACG", "T"}, {"TCGA", "A"}}), ProbeSpace::kmers(2), 2);
  HybridizationGraph g(inst);
  g.enforce_invariants();
  const auto& space = inst.space();
  HybridizationGraph::Vertex gt = 0;
  for (HybridizationGraph::Vertex x = 0; x < g.probe_count(); ++x) {
    if (space.probe(g.probe_id(x)).str() == "GT") gt = x;
  }
  REQUIRE(g.probe_live(gt));
  CHECK(g.probe_degree(gt) == 1);
  g.remove_primer(0);
  CHECK_FALSE(g.probe_live(gt));
  CHECK_THROWS_AS((void)g.probe_degree(gt), std::logic_error);
  CHECK_THROWS_AS(g.remove_probe(gt), std::logic_error);
  CHECK(g.check_consistency());

  // With r=2, deleting one of the two N+ probes of primer 0 kills it.
  HybridizationGraph h(inst);
  h.enforce_invariants();
  h.remove_probe(h.primer_pos(0)[0]);
  CHECK_FALSE(h.primer_live(0));
  CHECK(h.check_consistency());
}

TEST_CASE("edge symmetry and superset extensions") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const ProblemInstance inst = naive::small_instance(rng, 8, 2, 1, 12, 1 + trial % 4, 1);
    const HybridizationGraph g(inst);
    std::set<std::pair<std::uint32_t, std::uint32_t>> fwd, inv;
    for (HybridizationGraph::Vertex p = 0; p < g.primer_count(); ++p) {
      for (auto x : g.primer_pos(p)) fwd.insert({p, x});
      for (auto x : g.primer_neg(p)) fwd.insert({p, x + 1000000});
      std::set<std::uint32_t> pos(g.primer_pos(p).begin(), g.primer_pos(p).end());
      for (auto x : g.primer_neg(p)) CHECK(pos.count(x) == 0);
      const Primer& pr = inst.primer(g.primer_ref(p));
      std::set<std::uint64_t> pos_ids;
      for (auto x : g.primer_pos(p)) pos_ids.insert(g.probe_id(x).value);
      CHECK(pos_ids == naive::spectrum(pr.sequence.str(), inst.space()));
      std::vector<ProbeId> neg = inst.space().extended_spectrum(pr.sequence, pr.extensions);
      std::vector<ProbeId> neg_all = inst.space().extended_spectrum(pr.sequence, BaseSet::all());
      CHECK(std::includes(neg_all.begin(), neg_all.end(), neg.begin(), neg.end()));
    }
    for (HybridizationGraph::Vertex x = 0; x < g.probe_count(); ++x) {
      CHECK(g.probe_pos(x).size() + g.probe_neg(x).size() > 0);
      for (auto p : g.probe_pos(x)) inv.insert({p, x});
      for (auto p : g.probe_neg(x)) inv.insert({p, x + 1000000});
    }
    CHECK(fwd == inv);
    const HybridizationGraph again(inst);
    for (HybridizationGraph::Vertex p = 0; p < g.primer_count(); ++p) {
      CHECK(std::ranges::equal(g.primer_pos(p), again.primer_pos(p)));
    }
  }
}

TEST_CASE("random removals keep counters consistent") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const ProblemInstance inst = naive::small_instance(rng, 8, 2, 3, 10, 2, 1 + trial % 3);
    HybridizationGraph g(inst);
    g.enforce_invariants();
    CHECK(g.check_consistency());
    for (int step = 0; step < 6; ++step) {
      if (rng() % 2 && g.live_primers() > 0) {
        std::vector<HybridizationGraph::Vertex> live;
        for (HybridizationGraph::Vertex p = 0; p < g.primer_count(); ++p) {
          if (g.primer_live(p)) live.push_back(p);
        }
        g.remove_primer(live[rng() % live.size()]);
      } else if (g.live_probes() > 0) {
        std::vector<HybridizationGraph::Vertex> live;
        for (HybridizationGraph::Vertex x = 0; x < g.probe_count(); ++x) {
          if (g.probe_live(x)) live.push_back(x);
        }
        g.remove_probe(live[rng() % live.size()]);
      }
      CHECK(g.check_consistency());
    }
  }
}

}

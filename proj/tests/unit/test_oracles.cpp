#include <sstream>

#include "doctest.h"
#include "naive.hpp"
#include "sbesbh/graph.hpp"
#include "sbesbh/oracles.hpp"

using namespace sbesbh;

namespace {

BipartiteGraph random_graph(std::mt19937_64& rng, std::size_t max_side) {
  for (;;) {
    BipartiteGraph g;
    g.left = 1 + rng() % max_side;
    g.right = 1 + rng() % max_side;
    std::vector<std::size_t> deg_u(g.left), deg_v(g.right);
    for (std::uint32_t u = 0; u < g.left; ++u) {
      for (std::uint32_t v = 0; v < g.right; ++v) {
        if (rng() % 3 == 0 && deg_u[u] < 3 && deg_v[v] < 3) {
          g.edges.push_back({u, v});
          ++deg_u[u];
          ++deg_v[v];
        }
      }
    }
    if (!g.edges.empty() && g.min_degree() >= 1) return g;
  }
}

}  // namespace

TEST_SUITE("oracles") {

TEST_CASE("brute-force MDPSP basics") {
  CHECK(brute_force_mdpsp(ProblemInstance({}, ProbeSpace::kmers(2), 1)).optimum == 0);
  const ProblemInstance twins(naive::single_primer_pools({{"ACGT", "A"}, {"ACGT", "A"}}), ProbeSpace::kmers(2), 1);
  const auto result = brute_force_mdpsp(twins);
  CHECK(result.optimum == 1);
  CHECK(verify_design(result.witness, twins).ok());
}

TEST_CASE("brute-force MDPSP refuses oversized instances") {
  const auto pools = generate_random(RandomSpec{30, 2, 8, ExtensionMode::AllFour, 1});
  CHECK_THROWS_AS(brute_force_mdpsp(ProblemInstance(pools, ProbeSpace::kmers(3), 1)), SizeError);
}

TEST_CASE("brute-force MIM") {
  CHECK(brute_force_mim({1, 1, {{0, 0}}}) == 1);
  CHECK(brute_force_mim({1, 3, {{0, 0}, {0, 1}, {0, 2}}}) == 1);
  CHECK(brute_force_mim({2, 2, {{0, 0}, {1, 0}, {1, 1}}}) == 1);
  CHECK(brute_force_mim({2, 2, {{0, 0}, {1, 1}}}) == 2);
  // C6 = u0 v0 u2 v2 u1 v1: {u0v0, u1v2} is induced, and three edges would cover all six vertices.
  CHECK(brute_force_mim({3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}}}) == 2);
  CHECK(brute_force_mim({3, 3, {{0, 0}, {1, 1}, {2, 2}}}) == 3);
  CHECK_THROWS_AS(brute_force_mim({13, 12, {{0, 0}}}), SizeError);
}

TEST_CASE("reduction shape") {
  const auto two = reduce_mim_to_mdpsp({1, 2, {{0, 0}, {0, 1}}});
  CHECK(two.probe_length == 1);
  CHECK(two.probe_assignment[0].str() == "A");
  CHECK(two.probe_assignment[1].str() == "T");
  CHECK(two.instance.pools()[0].primers[0].sequence.str() == "ACT");

  const auto single = reduce_mim_to_mdpsp({2, 4, {{0, 2}, {1, 0}, {1, 1}, {1, 3}}});
  CHECK(single.probe_length == 2);
  CHECK(single.instance.pools()[0].primers[0].sequence == single.probe_assignment[2]);
  CHECK(single.instance.pools()[0].primers[0].extensions.str() == "CG");

  CHECK_THROWS(reduce_mim_to_mdpsp({1, 4, {{0, 0}, {0, 1}, {0, 2}, {0, 3}}}));
  CHECK_THROWS(reduce_mim_to_mdpsp({2, 1, {{0, 0}}}));
}

TEST_CASE("reduction of a 6-cycle") {
  const BipartiteGraph c6{3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}}};
  CHECK(brute_force_mdpsp(reduce_mim_to_mdpsp(c6).instance).optimum == 2);
  const BipartiteGraph k33{3, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}}};
  CHECK(brute_force_mdpsp(reduce_mim_to_mdpsp(k33).instance).optimum == 1);
}

TEST_CASE("reduction preserves the optimum and has no extension-only edges") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const BipartiteGraph g = random_graph(rng, 10);
    const auto red = reduce_mim_to_mdpsp(g);
    CHECK(static_cast<int>(red.instance.pools()[0].primers[0].sequence.size()) <= 3 * red.probe_length + 2);
    const HybridizationGraph hg(red.instance);
    const auto nbrs = g.left_neighbours();
    for (HybridizationGraph::Vertex p = 0; p < hg.primer_count(); ++p) {
      CHECK(hg.primer_neg(p).empty());
      std::vector<std::uint64_t> spec;
      for (auto x : hg.primer_pos(p)) spec.push_back(hg.probe_id(x).value);
      CHECK(spec == std::vector<std::uint64_t>(nbrs[p].begin(), nbrs[p].end()));
    }
    CHECK(brute_force_mim(g) == brute_force_mdpsp(red.instance).optimum);
  }
}

TEST_CASE("edge lists") {
  std::istringstream in("# graph\n0\t0\n1\t0\n1\t2\n");
  const BipartiteGraph g = read_edge_list(in);
  CHECK(g.left == 2);
  CHECK(g.right == 3);
  CHECK(g.max_degree() == 2);
  std::istringstream dup("0\t0\n0\t0\n");
  CHECK_THROWS_AS(read_edge_list(dup), ParseError);
  std::istringstream junk("0\tx\n");
  CHECK_THROWS_AS(read_edge_list(junk), ParseError);
}

}

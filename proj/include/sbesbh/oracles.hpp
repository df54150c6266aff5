#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sbesbh/decodability.hpp"
#include "sbesbh/instance.hpp"

namespace sbesbh {

class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// G = (U + V, E) with U = 0..left-1 and V = 0..right-1.
struct BipartiteGraph {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  // Throws ParseError on out-of-range endpoints or duplicate edges.
  void validate() const;
  std::vector<std::vector<std::uint32_t>> left_neighbours() const;  // sorted
  std::size_t max_degree() const;
  std::size_t min_degree() const;
};

// `u_index<TAB>v_index` per line, '#' comments. Sides are sized by the
// largest index seen.
BipartiteGraph read_edge_list(std::istream& in, const std::string& source = "<input>");

struct BruteForceResult {
  std::size_t optimum = 0;
  DesignResult witness;
};

inline constexpr std::uint64_t kDefaultBruteForceCap = 2'000'000;

/// Exhaustive MDPSP over every pool subset and representative choice. Refuses
/// (SizeError) when prod(|P_i| + 1) exceeds `cap`.
BruteForceResult brute_force_mdpsp(const ProblemInstance& instance, std::uint64_t cap = kDefaultBruteForceCap);

/// Largest edge set inducing a matching, by backtracking over edges.
/// Requires left + right <= 24.
std::size_t brute_force_mim(const BipartiteGraph& g);

struct ReductionOutput {
  ProblemInstance instance;  // r = 1, one primer per pool, E = {C, G}
  int probe_length = 0;      // l = ceil(log2 |V|), at least 1
  std::vector<DnaString> probe_assignment;  // x_v in {A,T}^l, v in index order
};

/// MIM on bipartite G (U-degree <= 3, no isolated vertex) to MDPSP. Pool u
/// holds p_u = x_{v1} C x_{v2} C x_{v3} over u's neighbours in index order.
/// The probe space lists reverse_complement(x_v) so that Spec(p_u) is exactly
/// { x_v : v in N(u) } under the usual complement-of-substring rule.
ReductionOutput reduce_mim_to_mdpsp(const BipartiteGraph& g);

}  // namespace sbesbh

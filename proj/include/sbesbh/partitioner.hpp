#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sbesbh/decodability.hpp"
#include "sbesbh/solvers.hpp"

namespace sbesbh {

/// Iterated MDPSP extraction. Arrays carry pool ids of the full instance; each
/// array's fingerprint is that of the sub-instance made of its own pools.
struct PartitionReport {
  std::vector<DesignResult> arrays;
  std::vector<std::uint32_t> uncovered;   // undecodable even in isolation
  std::vector<std::uint32_t> unassigned;  // left over when max_arrays stopped the run
  std::size_t total_pools = 0;
  std::size_t forced_arrays = 0;          // singleton arrays added by the progress fallback

  std::size_t covered() const;
};

PartitionReport partition(const ProblemInstance& instance, const SolverConfig& config = {},
                          std::optional<std::size_t> max_arrays = std::nullopt);

struct CoveragePoint {
  std::size_t array_index;  // 1-based
  double fraction;
};

/// Cumulative covered fraction after each array, over all pools.
std::vector<CoveragePoint> coverage_curve(const PartitionReport& report);
/// Same, with uncovered pools removed from the denominator.
std::vector<CoveragePoint> coverage_curve_decodable(const PartitionReport& report);

/// True iff some primer of the pool has at least r probes in its own spectrum.
bool decodable_in_isolation(const Pool& pool, const ProbeSpace& space, int r);

/// An array as a standalone instance with pool ids renumbered to match.
struct LocalizedDesign {
  SubInstance sub;
  DesignResult design;
};
LocalizedDesign localize(const DesignResult& array, const ProblemInstance& full);

}  // namespace sbesbh

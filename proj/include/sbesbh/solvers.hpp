#pragma once

#include <string>
#include <string_view>

#include "sbesbh/decodability.hpp"
#include "sbesbh/graph.hpp"
#include "sbesbh/instance.hpp"

namespace sbesbh {

enum class Algorithm { Sequential, MinPrimer, MinProbe };

struct SolverConfig {
  Algorithm algorithm = Algorithm::Sequential;
  DegreeMode degree_mode = DegreeMode::Total;  // ignored by Sequential
};

// "seq", "minprimer", "minprobe"
Algorithm parse_algorithm(std::string_view name);
const char* algorithm_name(Algorithm a) noexcept;
// "total", "positive"
DegreeMode parse_degree_mode(std::string_view name);
const char* degree_mode_name(DegreeMode m) noexcept;

/// Scans pools and their primers in input order, accepting a primer iff the
/// selection plus that primer stays strongly r-decodable. Feasibility is
/// evaluated incrementally from per-probe cover counts.
DesignResult sequential_greedy(const ProblemInstance& instance);

/// Repeatedly selects a minimum-degree primer, takes its r lowest-degree N+
/// probes as witnesses, and deletes everything that would conflict.
DesignResult min_primer_greedy(const ProblemInstance& instance, DegreeMode mode = DegreeMode::Total);

/// As min_primer_greedy, but each step starts from a minimum-degree probe and
/// picks a minimum-degree primer among its N+ neighbours.
DesignResult min_probe_greedy(const ProblemInstance& instance, DegreeMode mode = DegreeMode::Total);

DesignResult solve(const ProblemInstance& instance, const SolverConfig& config);

}  // namespace sbesbh

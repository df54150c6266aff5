#include "sbesbh/partitioner.hpp"

#include <algorithm>

namespace sbesbh {

std::size_t PartitionReport::covered() const {
  std::size_t n = 0;
  for (const DesignResult& a : arrays) n += a.size();
  return n;
}

bool decodable_in_isolation(const Pool& pool, const ProbeSpace& space, int r) {
  return std::any_of(pool.primers.begin(), pool.primers.end(), [&](const Primer& p) {
    return space.spectrum(p.sequence).size() >= static_cast<std::size_t>(r);
  });
}

namespace {

std::vector<std::uint32_t> pool_ids_of(const DesignResult& design) {
  std::vector<std::uint32_t> ids;
  ids.reserve(design.size());
  for (const Selection& s : design.selected) ids.push_back(s.pool_id);
  return ids;
}

DesignResult singleton_array(const ProblemInstance& full, std::uint32_t pool_id) {
  const Pool& pool = full.pools()[pool_id];
  const auto r = static_cast<std::size_t>(full.redundancy());
  for (std::uint32_t i = 0; i < pool.primers.size(); ++i) {
    auto spec = full.space().spectrum(pool.primers[i].sequence);
    if (spec.size() < r) continue;
    spec.resize(r);
    DesignResult d;
    d.selected.push_back({pool_id, i, std::move(spec)});
    return d;
  }
  throw std::logic_error("singleton fallback on an undecodable pool");
}

}  // namespace

LocalizedDesign localize(const DesignResult& array, const ProblemInstance& full) {
  LocalizedDesign out{subinstance(full, pool_ids_of(array)), array};
  for (std::size_t i = 0; i < out.design.selected.size(); ++i) {
    out.design.selected[i].pool_id = static_cast<std::uint32_t>(i);
  }
  return out;
}

PartitionReport partition(const ProblemInstance& instance, const SolverConfig& config,
                          std::optional<std::size_t> max_arrays) {
  PartitionReport report;
  report.total_pools = instance.pool_count();

  std::vector<std::uint32_t> residual(instance.pool_count());
  for (std::uint32_t i = 0; i < residual.size(); ++i) residual[i] = i;

  auto add_array = [&](DesignResult array) {
    array.fingerprint = subinstance(instance, pool_ids_of(array)).instance.fingerprint();
    std::vector<std::uint32_t> taken = pool_ids_of(array);
    std::vector<std::uint32_t> rest;
    std::set_difference(residual.begin(), residual.end(), taken.begin(), taken.end(), std::back_inserter(rest));
    residual = std::move(rest);
    report.arrays.push_back(std::move(array));
  };

  while (!residual.empty() && (!max_arrays || report.arrays.size() < *max_arrays)) {
    const SubInstance sub = subinstance(instance, residual);
    DesignResult found = solve(sub.instance, config);
    if (!found.selected.empty()) {
      for (Selection& s : found.selected) s.pool_id = sub.original_ids[s.pool_id];
      found.normalize();
      add_array(std::move(found));
      continue;
    }
    std::vector<std::uint32_t> decodable;
    for (std::uint32_t id : residual) {
      if (decodable_in_isolation(instance.pools()[id], instance.space(), instance.redundancy())) {
        decodable.push_back(id);
      } else {
        report.uncovered.push_back(id);
      }
    }
    residual = std::move(decodable);
    if (residual.empty()) break;
    ++report.forced_arrays;
    add_array(singleton_array(instance, residual.front()));
  }
  report.unassigned = std::move(residual);
  std::sort(report.uncovered.begin(), report.uncovered.end());
  return report;
}

std::vector<CoveragePoint> coverage_curve(const PartitionReport& report) {
  std::vector<CoveragePoint> curve;
  if (report.total_pools == 0) return curve;
  std::size_t covered = 0;
  for (std::size_t i = 0; i < report.arrays.size(); ++i) {
    covered += report.arrays[i].size();
    curve.push_back({i + 1, static_cast<double>(covered) / static_cast<double>(report.total_pools)});
  }
  return curve;
}

std::vector<CoveragePoint> coverage_curve_decodable(const PartitionReport& report) {
  std::vector<CoveragePoint> curve;
  const std::size_t denom = report.total_pools - report.uncovered.size();
  if (denom == 0) return curve;
  std::size_t covered = 0;
  for (std::size_t i = 0; i < report.arrays.size(); ++i) {
    covered += report.arrays[i].size();
    curve.push_back({i + 1, static_cast<double>(covered) / static_cast<double>(denom)});
  }
  return curve;
}

}  // namespace sbesbh

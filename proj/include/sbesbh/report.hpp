#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sbesbh/decodability.hpp"
#include "sbesbh/partitioner.hpp"

namespace sbesbh {

/// `# key<TAB>value` lines opening every report.
struct Manifest {
  std::vector<std::pair<std::string, std::string>> entries;

  void set(std::string key, std::string value);
  const std::string* find(const std::string& key) const;
};

void write_manifest(std::ostream& out, const Manifest& manifest);

/// Selection lines `pool_id<TAB>primer_index<TAB>w1,w2,...` then `# selected` summary.
void write_design(std::ostream& out, const DesignResult& design, std::size_t pool_count);

/// One `# array<TAB>i<TAB>fingerprint` block per array, then the coverage
/// curve, the uncovered and unassigned pool lists, and a summary line.
void write_partition(std::ostream& out, const PartitionReport& report);

struct ParsedReport {
  Manifest manifest;
  bool partition = false;
  std::vector<DesignResult> designs;  // one per array (or one for a solve report)
  std::vector<std::uint32_t> uncovered;
  std::vector<std::uint32_t> unassigned;
};

ParsedReport read_report(std::istream& in, const std::string& source = "<input>");

}  // namespace sbesbh

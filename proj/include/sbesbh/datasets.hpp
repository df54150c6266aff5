#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sbesbh/instance.hpp"

namespace sbesbh {

enum class ExtensionMode { AllFour, AllelePair };

// "all4", "pair"
ExtensionMode parse_extension_mode(std::string_view name);
const char* extension_mode_name(ExtensionMode m) noexcept;

struct RandomSpec {
  std::size_t n_pools = 1000;
  int primers_per_pool = 1;  // 1 or 2
  int primer_length = 20;
  ExtensionMode extension_mode = ExtensionMode::AllFour;
  std::uint64_t rng_seed = 1;
};

/// Seeded random pools. The generator is std::mt19937_64 seeded with
/// rng_seed. Per pool, in order: in AllelePair mode one draw `% 6` picks the
/// allele pair from {AC, AG, AT, CG, CT, GT}; then each primer takes
/// primer_length draws `% 4` mapped through A=0, C=1, G=2, T=3. Primer 1 is
/// tagged '+', primer 2 '-'. AllelePair gives primer 1 the complemented pair
/// and primer 2 the pair itself.
std::vector<Pool> generate_random(const RandomSpec& spec);

inline ProblemInstance generate_random(const RandomSpec& spec, const ProbeSpace& space, int redundancy) {
  return ProblemInstance(generate_random(spec), space, redundancy);
}

struct SnpRecord {
  std::string id;
  std::string left_flank;
  BaseSet alleles;
  std::string right_flank;
};

struct SkippedRecord {
  std::string id;
  std::string reason;
};

struct SnpIngest {
  std::vector<Pool> pools;
  std::vector<std::string> snp_ids;  // per pool
  std::vector<SkippedRecord> skipped;
};

/// Parses `id<TAB>left_flank<TAB>alleles<TAB>right_flank` records ('#'
/// comments, optional header starting with "id"). Builds a forward primer from
/// the last L bases of the left flank with E = complement(alleles) and a
/// reverse primer reverse_complement(first L bases of the right flank) with
/// E = alleles. Records without L clean bases on both sides are skipped.
SnpIngest load_snp_table(std::istream& in, int primer_length, const std::string& source = "<input>");
SnpIngest load_snp_table_file(const std::string& path, int primer_length);

}  // namespace sbesbh

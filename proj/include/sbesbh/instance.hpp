#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sbesbh/dnaseq.hpp"
#include "sbesbh/probespace.hpp"

namespace sbesbh {

enum class Strand { Forward, Reverse, Unspecified };

// "+", "-", "."
char strand_symbol(Strand s) noexcept;
Strand parse_strand(std::string_view text);

struct Primer {
  DnaString sequence;
  BaseSet extensions;  // E_p, 1..4 bases
  std::uint32_t pool_id = 0;
  Strand strand = Strand::Unspecified;
};

/// Alternative primers for one locus (1 or 2, at most one per strand tag).
struct Pool {
  std::uint32_t id = 0;
  std::vector<Primer> primers;
};

/// Locates a primer: pool id plus position within the pool.
struct PrimerRef {
  std::uint32_t pool_id = 0;
  std::uint32_t primer_index = 0;
  friend constexpr auto operator<=>(PrimerRef, PrimerRef) = default;
};

/// Pools with dense ids 0..n-1, the probe space, and the redundancy r.
class ProblemInstance {
 public:
  ProblemInstance(std::vector<Pool> pools, ProbeSpace space, int redundancy);

  const std::vector<Pool>& pools() const noexcept { return pools_; }
  const ProbeSpace& space() const noexcept { return space_; }
  int redundancy() const noexcept { return redundancy_; }
  std::size_t pool_count() const noexcept { return pools_.size(); }
  std::size_t primer_count() const noexcept { return primer_offsets_.back(); }

  const Primer& primer(PrimerRef ref) const { return pools_.at(ref.pool_id).primers.at(ref.primer_index); }

  // Global primer index: pools in id order, primers in pool order.
  std::uint32_t primer_offset(std::uint32_t pool_id) const { return primer_offsets_.at(pool_id); }
  PrimerRef ref_of(std::uint32_t global_index) const;

  // Same primers under a different space or redundancy.
  ProblemInstance with(ProbeSpace space, int redundancy) const;

  // FNV-1a 64 of the canonical instance text, as 16 hex digits.
  std::string fingerprint() const;

 private:
  std::vector<Pool> pools_;
  ProbeSpace space_;
  int redundancy_;
  std::vector<std::uint32_t> primer_offsets_;
};

/// A residual instance over a subset of pools, renumbered densely.
struct SubInstance {
  ProblemInstance instance;
  std::vector<std::uint32_t> original_ids;  // local id -> id in the parent
};

SubInstance subinstance(const ProblemInstance& parent, const std::vector<std::uint32_t>& pool_ids);

// Text format: `pool_id<TAB>strand<TAB>sequence<TAB>extensions` per primer,
// '#' comment lines. Pool ids must form 0..n-1; primers keep file order.
std::vector<Pool> read_pools(std::istream& in, const std::string& source = "<input>");
std::vector<Pool> read_pools_file(const std::string& path);
void write_pools(std::ostream& out, const std::vector<Pool>& pools);
std::string pools_text(const std::vector<Pool>& pools);

// Throws ParseError when a pool breaks the model invariants.
void validate_pools(const std::vector<Pool>& pools);

}  // namespace sbesbh

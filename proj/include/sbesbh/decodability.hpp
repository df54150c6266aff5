#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbesbh/instance.hpp"
#include "sbesbh/probespace.hpp"

namespace sbesbh {

/// One chosen pool: its representative primer and its witness probes.
struct Selection {
  std::uint32_t pool_id = 0;
  std::uint32_t primer_index = 0;
  std::vector<ProbeId> witnesses;  // sorted ascending
  friend bool operator==(const Selection&, const Selection&) = default;
};

struct DesignResult {
  std::vector<Selection> selected;  // sorted by pool id
  std::string fingerprint;          // of the instance solved, empty if unknown
  std::size_t pruned_primers = 0;   // primers with an empty unextended spectrum

  std::size_t size() const noexcept { return selected.size(); }
  void normalize();
  friend bool operator==(const DesignResult&, const DesignResult&) = default;
};

/// Spec(p) minus the extended spectra of `others`.
std::vector<ProbeId> informative_probes(const Primer& p, const std::vector<Primer>& others, const ProbeSpace& space);

struct DecodabilityCheck {
  bool decodable = false;
  std::vector<std::size_t> informative_counts;     // per primer
  std::vector<std::vector<ProbeId>> witnesses;     // r lowest ids per primer, filled when decodable
};

/// Strong r-decodability of a primer set, in time linear in total primer length.
DecodabilityCheck check_strongly_r_decodable(const std::vector<Primer>& primers, int r, const ProbeSpace& space);

inline bool is_strongly_r_decodable(const std::vector<Primer>& primers, int r, const ProbeSpace& space) {
  return check_strongly_r_decodable(primers, r, space).decodable;
}

enum class ViolationKind {
  Structural,         // dangling pool or primer reference
  DuplicatePool,      // a pool selected twice
  Fingerprint,        // result produced for a different instance
  TooFewWitnesses,    // fewer than r distinct witnesses listed
  DuplicateWitness,   // the same probe listed twice for one pool
  WitnessNotInSpectrum,
  WitnessCrossHybridizes,  // witness lies in another representative's extended spectrum
  WitnessShared,      // two pools list the same witness
  NotDecodable,       // fewer than r informative probes overall
};

const char* violation_name(ViolationKind kind) noexcept;

struct Violation {
  std::optional<std::uint32_t> pool_id;
  ViolationKind kind;
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;
  std::size_t checked_pools = 0;

  bool ok() const noexcept { return violations.empty(); }
  std::size_t count(ViolationKind kind) const;
  // One `pool_id<TAB>kind<TAB>detail` line per violation, then a summary line.
  std::string to_text() const;
};

/// Recomputes every spectrum from the primer sequences and checks the design
/// against the instance's redundancy. Shares no state with the solvers.
VerificationReport verify_design(const DesignResult& result, const ProblemInstance& instance);

}  // namespace sbesbh

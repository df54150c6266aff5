#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sbesbh/instance.hpp"
#include "sbesbh/probespace.hpp"

namespace sbesbh {

/// Which edges count toward a vertex's degree in the min-degree solvers.
enum class DegreeMode { Total, PositiveOnly };

/// Bipartite primer/probe graph. Primer p links to x in N+(p) = Spec(p) and to
/// x in N-(p) = Spec(p, E_p) \ Spec(p). Only probes with at least one edge are
/// materialized; they are numbered locally in increasing ProbeId order.
///
/// Adjacency is stored once (CSR) and never shrinks. Deletions flip a live flag
/// and decrement the live-neighbour counters of the surviving endpoints.
class HybridizationGraph {
 public:
  using Vertex = std::uint32_t;

  explicit HybridizationGraph(const ProblemInstance& instance);

  std::size_t primer_count() const noexcept { return primer_live_.size(); }
  std::size_t probe_count() const noexcept { return probe_ids_.size(); }
  int redundancy() const noexcept { return redundancy_; }

  ProbeId probe_id(Vertex x) const { return probe_ids_[x]; }
  PrimerRef primer_ref(Vertex p) const { return refs_[p]; }
  std::span<const Vertex> pool_primers(std::uint32_t pool_id) const;

  // Static adjacency, as built.
  std::span<const Vertex> primer_pos(Vertex p) const { return slice(primer_pos_, primer_pos_off_, p); }
  std::span<const Vertex> primer_neg(Vertex p) const { return slice(primer_neg_, primer_neg_off_, p); }
  std::span<const Vertex> probe_pos(Vertex x) const { return slice(probe_pos_, probe_pos_off_, x); }
  std::span<const Vertex> probe_neg(Vertex x) const { return slice(probe_neg_, probe_neg_off_, x); }

  bool primer_live(Vertex p) const { return primer_live_[p] != 0; }
  bool probe_live(Vertex x) const { return probe_live_[x] != 0; }
  std::size_t live_primers() const noexcept { return live_primer_count_; }
  std::size_t live_probes() const noexcept { return live_probe_count_; }

  // Live-neighbour counts.
  std::uint32_t primer_pos_degree(Vertex p) const { return primer_pos_live_[p]; }
  std::uint32_t primer_neg_degree(Vertex p) const { return primer_neg_live_[p]; }
  std::uint32_t probe_pos_degree(Vertex x) const { return probe_pos_live_[x]; }
  std::uint32_t probe_neg_degree(Vertex x) const { return probe_neg_live_[x]; }

  // Throw std::logic_error on a dead vertex.
  std::uint32_t primer_degree(Vertex p, DegreeMode mode = DegreeMode::Total) const;
  std::uint32_t probe_degree(Vertex x, DegreeMode mode = DegreeMode::Total) const;

  // Primers whose unextended spectrum was empty at build time.
  std::size_t empty_spectrum_primers() const noexcept { return empty_spectrum_primers_; }

  /// Deletes p; probes whose N+ empties are removed in turn (cascading).
  void remove_primer(Vertex p);
  /// Deletes x; primers whose |N+| drops below r are removed in turn.
  void remove_probe(Vertex x);

  /// Enforces |N+(p)| >= r for live primers and |N+(x)| >= 1 for live probes.
  void enforce_invariants();

  /// Marks a selected primer dead and detaches it without triggering cascades.
  void retire_primer(Vertex p);
  /// Deletes a probe without cascading; its live neighbours only lose the edge.
  void delete_probe(Vertex x);

  // Vertices whose degree changed since the last drain (deduplicated).
  std::vector<Vertex> drain_touched_primers();
  std::vector<Vertex> drain_touched_probes();

  // True iff counters match a full recount and both invariants hold.
  bool check_consistency() const;

 private:
  enum class Kind : std::uint8_t { Primer, Probe };
  struct Pending {
    Kind kind;
    Vertex v;
  };

  static std::span<const Vertex> slice(const std::vector<Vertex>& data, const std::vector<std::uint32_t>& off,
                                       Vertex v) {
    return {data.data() + off[v], data.data() + off[v + 1]};
  }

  void kill_primer(Vertex p);
  void kill_probe(Vertex x);
  void touch_primer(Vertex p);
  void touch_probe(Vertex x);
  void run_cascade();

  int redundancy_;
  std::vector<PrimerRef> refs_;
  std::vector<std::uint32_t> pool_offsets_;
  std::vector<Vertex> pool_members_;
  std::vector<ProbeId> probe_ids_;

  std::vector<std::uint32_t> primer_pos_off_, primer_neg_off_, probe_pos_off_, probe_neg_off_;
  std::vector<Vertex> primer_pos_, primer_neg_, probe_pos_, probe_neg_;

  std::vector<std::uint8_t> primer_live_, probe_live_;
  std::vector<std::uint32_t> primer_pos_live_, primer_neg_live_, probe_pos_live_, probe_neg_live_;
  std::size_t live_primer_count_ = 0;
  std::size_t live_probe_count_ = 0;
  std::size_t empty_spectrum_primers_ = 0;

  std::vector<Pending> pending_;
  std::vector<std::uint8_t> primer_touched_, probe_touched_;
  std::vector<Vertex> touched_primers_, touched_probes_;
};

}  // namespace sbesbh

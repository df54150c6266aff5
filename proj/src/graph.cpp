#include "sbesbh/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbesbh {

namespace {

// Offsets from per-vertex counts.
std::vector<std::uint32_t> prefix_offsets(const std::vector<std::uint32_t>& counts) {
  std::vector<std::uint32_t> off(counts.size() + 1, 0);
  for (std::size_t i = 0; i < counts.size(); ++i) off[i + 1] = off[i] + counts[i];
  return off;
}

}  // namespace

HybridizationGraph::HybridizationGraph(const ProblemInstance& instance) : redundancy_(instance.redundancy()) {
  const ProbeSpace& space = instance.space();
  const std::size_t n_primers = instance.primer_count();

  refs_.reserve(n_primers);
  pool_offsets_.reserve(instance.pool_count() + 1);
  for (const Pool& pool : instance.pools()) {
    pool_offsets_.push_back(static_cast<std::uint32_t>(refs_.size()));
    for (std::uint32_t i = 0; i < pool.primers.size(); ++i) {
      pool_members_.push_back(static_cast<Vertex>(refs_.size()));
      refs_.push_back(PrimerRef{pool.id, i});
    }
  }
  pool_offsets_.push_back(static_cast<std::uint32_t>(refs_.size()));

  // Spectra per primer, flattened.
  std::vector<ProbeId> pos_ids, neg_ids;
  std::vector<std::uint32_t> pos_count(n_primers), neg_count(n_primers);
  for (std::size_t i = 0; i < n_primers; ++i) {
    const Primer& primer = instance.primer(refs_[i]);
    const auto pos = space.spectrum(primer.sequence);
    const auto ext = space.extended_spectrum(primer.sequence, primer.extensions);
    std::vector<ProbeId> neg;
    std::set_difference(ext.begin(), ext.end(), pos.begin(), pos.end(), std::back_inserter(neg));
    pos_count[i] = static_cast<std::uint32_t>(pos.size());
    neg_count[i] = static_cast<std::uint32_t>(neg.size());
    if (pos.empty()) ++empty_spectrum_primers_;
    pos_ids.insert(pos_ids.end(), pos.begin(), pos.end());
    neg_ids.insert(neg_ids.end(), neg.begin(), neg.end());
  }

  probe_ids_.reserve(pos_ids.size() + neg_ids.size());
  probe_ids_.insert(probe_ids_.end(), pos_ids.begin(), pos_ids.end());
  probe_ids_.insert(probe_ids_.end(), neg_ids.begin(), neg_ids.end());
  std::sort(probe_ids_.begin(), probe_ids_.end());
  probe_ids_.erase(std::unique(probe_ids_.begin(), probe_ids_.end()), probe_ids_.end());
  probe_ids_.shrink_to_fit();

  auto local = [this](ProbeId id) {
    return static_cast<Vertex>(std::lower_bound(probe_ids_.begin(), probe_ids_.end(), id) - probe_ids_.begin());
  };

  primer_pos_off_ = prefix_offsets(pos_count);
  primer_neg_off_ = prefix_offsets(neg_count);
  primer_pos_.resize(pos_ids.size());
  primer_neg_.resize(neg_ids.size());
  std::vector<std::uint32_t> x_pos_count(probe_ids_.size(), 0), x_neg_count(probe_ids_.size(), 0);
  for (std::size_t e = 0; e < pos_ids.size(); ++e) {
    primer_pos_[e] = local(pos_ids[e]);
    ++x_pos_count[primer_pos_[e]];
  }
  for (std::size_t e = 0; e < neg_ids.size(); ++e) {
    primer_neg_[e] = local(neg_ids[e]);
    ++x_neg_count[primer_neg_[e]];
  }

  probe_pos_off_ = prefix_offsets(x_pos_count);
  probe_neg_off_ = prefix_offsets(x_neg_count);
  probe_pos_.resize(primer_pos_.size());
  probe_neg_.resize(primer_neg_.size());
  {
    std::vector<std::uint32_t> fill_pos(probe_pos_off_.begin(), probe_pos_off_.end() - 1);
    std::vector<std::uint32_t> fill_neg(probe_neg_off_.begin(), probe_neg_off_.end() - 1);
    for (Vertex p = 0; p < n_primers; ++p) {
      for (Vertex x : primer_pos(p)) probe_pos_[fill_pos[x]++] = p;
      for (Vertex x : primer_neg(p)) probe_neg_[fill_neg[x]++] = p;
    }
  }

  primer_live_.assign(n_primers, 1);
  probe_live_.assign(probe_ids_.size(), 1);
  primer_pos_live_ = std::move(pos_count);
  primer_neg_live_ = std::move(neg_count);
  probe_pos_live_ = std::move(x_pos_count);
  probe_neg_live_ = std::move(x_neg_count);
  live_primer_count_ = n_primers;
  live_probe_count_ = probe_ids_.size();
  primer_touched_.assign(n_primers, 0);
  probe_touched_.assign(probe_ids_.size(), 0);
}

std::span<const HybridizationGraph::Vertex> HybridizationGraph::pool_primers(std::uint32_t pool_id) const {
  return {pool_members_.data() + pool_offsets_.at(pool_id), pool_members_.data() + pool_offsets_.at(pool_id + 1)};
}

std::uint32_t HybridizationGraph::primer_degree(Vertex p, DegreeMode mode) const {
  if (!primer_live(p)) throw std::logic_error("degree query on a deleted primer");
  return mode == DegreeMode::Total ? primer_pos_live_[p] + primer_neg_live_[p] : primer_pos_live_[p];
}

std::uint32_t HybridizationGraph::probe_degree(Vertex x, DegreeMode mode) const {
  if (!probe_live(x)) throw std::logic_error("degree query on a deleted probe");
  return mode == DegreeMode::Total ? probe_pos_live_[x] + probe_neg_live_[x] : probe_pos_live_[x];
}

void HybridizationGraph::touch_primer(Vertex p) {
  if (!primer_touched_[p]) {
    primer_touched_[p] = 1;
    touched_primers_.push_back(p);
  }
}

void HybridizationGraph::touch_probe(Vertex x) {
  if (!probe_touched_[x]) {
    probe_touched_[x] = 1;
    touched_probes_.push_back(x);
  }
}

std::vector<HybridizationGraph::Vertex> HybridizationGraph::drain_touched_primers() {
  for (Vertex p : touched_primers_) primer_touched_[p] = 0;
  return std::exchange(touched_primers_, {});
}

std::vector<HybridizationGraph::Vertex> HybridizationGraph::drain_touched_probes() {
  for (Vertex x : touched_probes_) probe_touched_[x] = 0;
  return std::exchange(touched_probes_, {});
}

void HybridizationGraph::kill_primer(Vertex p) {
  primer_live_[p] = 0;
  --live_primer_count_;
  pending_.push_back({Kind::Primer, p});
}

void HybridizationGraph::kill_probe(Vertex x) {
  probe_live_[x] = 0;
  --live_probe_count_;
  pending_.push_back({Kind::Probe, x});
}

// Vertices are flagged dead when queued, so each is deleted at most once and a
// dead neighbour's counters are never touched again.
void HybridizationGraph::run_cascade() {
  const auto r = static_cast<std::uint32_t>(redundancy_);
  while (!pending_.empty()) {
    const Pending item = pending_.back();
    pending_.pop_back();
    if (item.kind == Kind::Primer) {
      for (Vertex x : primer_pos(item.v)) {
        if (!probe_live_[x]) continue;
        --probe_pos_live_[x];
        touch_probe(x);
        if (probe_pos_live_[x] == 0) kill_probe(x);
      }
      for (Vertex x : primer_neg(item.v)) {
        if (!probe_live_[x]) continue;
        --probe_neg_live_[x];
        touch_probe(x);
      }
    } else {
      for (Vertex p : probe_pos(item.v)) {
        if (!primer_live_[p]) continue;
        --primer_pos_live_[p];
        touch_primer(p);
        if (primer_pos_live_[p] < r) kill_primer(p);
      }
      for (Vertex p : probe_neg(item.v)) {
        if (!primer_live_[p]) continue;
        --primer_neg_live_[p];
        touch_primer(p);
      }
    }
  }
}

void HybridizationGraph::remove_primer(Vertex p) {
  if (!primer_live(p)) throw std::logic_error("remove_primer on a deleted primer");
  kill_primer(p);
  run_cascade();
}

void HybridizationGraph::remove_probe(Vertex x) {
  if (!probe_live(x)) throw std::logic_error("remove_probe on a deleted probe");
  kill_probe(x);
  run_cascade();
}

void HybridizationGraph::enforce_invariants() {
  const auto r = static_cast<std::uint32_t>(redundancy_);
  for (Vertex x = 0; x < probe_count(); ++x) {
    if (probe_live_[x] && probe_pos_live_[x] == 0) kill_probe(x);
  }
  for (Vertex p = 0; p < primer_count(); ++p) {
    if (primer_live_[p] && primer_pos_live_[p] < r) kill_primer(p);
  }
  run_cascade();
}

void HybridizationGraph::retire_primer(Vertex p) {
  if (!primer_live(p)) throw std::logic_error("retire_primer on a deleted primer");
  primer_live_[p] = 0;
  --live_primer_count_;
  for (Vertex x : primer_pos(p)) {
    if (!probe_live_[x]) continue;
    --probe_pos_live_[x];
    touch_probe(x);
  }
  for (Vertex x : primer_neg(p)) {
    if (!probe_live_[x]) continue;
    --probe_neg_live_[x];
    touch_probe(x);
  }
}

void HybridizationGraph::delete_probe(Vertex x) {
  if (!probe_live(x)) throw std::logic_error("delete_probe on a deleted probe");
  probe_live_[x] = 0;
  --live_probe_count_;
  for (Vertex p : probe_pos(x)) {
    if (!primer_live_[p]) continue;
    --primer_pos_live_[p];
    touch_primer(p);
  }
  for (Vertex p : probe_neg(x)) {
    if (!primer_live_[p]) continue;
    --primer_neg_live_[p];
    touch_primer(p);
  }
}

bool HybridizationGraph::check_consistency() const {
  const auto r = static_cast<std::uint32_t>(redundancy_);
  for (Vertex p = 0; p < primer_count(); ++p) {
    if (!primer_live_[p]) continue;
    std::uint32_t pos = 0, neg = 0;
    for (Vertex x : primer_pos(p)) pos += probe_live_[x];
    for (Vertex x : primer_neg(p)) neg += probe_live_[x];
    if (pos != primer_pos_live_[p] || neg != primer_neg_live_[p] || pos < r) return false;
  }
  for (Vertex x = 0; x < probe_count(); ++x) {
    if (!probe_live_[x]) continue;
    std::uint32_t pos = 0, neg = 0;
    for (Vertex p : probe_pos(x)) pos += primer_live_[p];
    for (Vertex p : probe_neg(x)) neg += primer_live_[p];
    if (pos != probe_pos_live_[x] || neg != probe_neg_live_[x] || pos < 1) return false;
  }
  return true;
}

}  // namespace sbesbh

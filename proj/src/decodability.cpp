#include "sbesbh/decodability.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace sbesbh {

namespace {

struct ProbeHash {
  std::size_t operator()(ProbeId id) const noexcept { return std::hash<std::uint64_t>{}(id.value); }
};

}  // namespace

void DesignResult::normalize() {
  for (Selection& s : selected) std::sort(s.witnesses.begin(), s.witnesses.end());
  std::sort(selected.begin(), selected.end(),
            [](const Selection& a, const Selection& b) { return a.pool_id < b.pool_id; });
}

std::vector<ProbeId> informative_probes(const Primer& p, const std::vector<Primer>& others, const ProbeSpace& space) {
  std::unordered_set<ProbeId, ProbeHash> covered;
  for (const Primer& o : others) {
    for (ProbeId x : space.extended_spectrum(o.sequence, o.extensions)) covered.insert(x);
  }
  std::vector<ProbeId> out;
  for (ProbeId x : space.spectrum(p.sequence)) {
    if (!covered.contains(x)) out.push_back(x);
  }
  return out;
}

DecodabilityCheck check_strongly_r_decodable(const std::vector<Primer>& primers, int r, const ProbeSpace& space) {
  // cover[x] = number of primers whose extended spectrum contains x. Since
  // Spec(p) is inside Spec(p, E_p), x in Spec(p) is informative iff cover[x] == 1.
  std::unordered_map<ProbeId, std::uint32_t, ProbeHash> cover;
  std::vector<std::vector<ProbeId>> spectra(primers.size());
  for (std::size_t i = 0; i < primers.size(); ++i) {
    for (ProbeId x : space.extended_spectrum(primers[i].sequence, primers[i].extensions)) ++cover[x];
    spectra[i] = space.spectrum(primers[i].sequence);
  }
  DecodabilityCheck check;
  check.decodable = true;
  check.informative_counts.resize(primers.size());
  check.witnesses.resize(primers.size());
  for (std::size_t i = 0; i < primers.size(); ++i) {
    for (ProbeId x : spectra[i]) {
      if (cover[x] != 1) continue;
      ++check.informative_counts[i];
      if (check.witnesses[i].size() < static_cast<std::size_t>(r)) check.witnesses[i].push_back(x);
    }
    if (check.informative_counts[i] < static_cast<std::size_t>(r)) check.decodable = false;
  }
  if (!check.decodable) check.witnesses.clear();
  return check;
}

const char* violation_name(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::Structural: return "structural";
    case ViolationKind::DuplicatePool: return "duplicate_pool";
    case ViolationKind::Fingerprint: return "fingerprint";
    case ViolationKind::TooFewWitnesses: return "too_few_witnesses";
    case ViolationKind::DuplicateWitness: return "duplicate_witness";
    case ViolationKind::WitnessNotInSpectrum: return "witness_not_in_spectrum";
    case ViolationKind::WitnessCrossHybridizes: return "witness_cross_hybridizes";
    case ViolationKind::WitnessShared: return "witness_shared";
    case ViolationKind::NotDecodable: return "not_decodable";
  }
  return "unknown";
}

std::size_t VerificationReport::count(ViolationKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; }));
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const Violation& v : violations) {
    if (v.pool_id) {
      out << *v.pool_id;
    } else {
      out << '*';
    }
    out << '\t' << violation_name(v.kind) << '\t' << v.detail << '\n';
  }
  out << "# violations\t" << violations.size() << "\tpools_checked\t" << checked_pools << '\n';
  return out.str();
}

VerificationReport verify_design(const DesignResult& result, const ProblemInstance& instance) {
  VerificationReport report;
  const ProbeSpace& space = instance.space();
  const auto r = static_cast<std::size_t>(instance.redundancy());
  auto flag = [&report](std::optional<std::uint32_t> pool, ViolationKind kind, std::string detail) {
    report.violations.push_back({pool, kind, std::move(detail)});
  };

  if (!result.fingerprint.empty() && result.fingerprint != instance.fingerprint()) {
    flag(std::nullopt, ViolationKind::Fingerprint,
         "result fingerprint " + result.fingerprint + " differs from instance " + instance.fingerprint());
  }

  // Structurally valid, non-duplicate selections take part in the checks.
  std::vector<const Selection*> reps;
  std::unordered_set<std::uint32_t> seen_pools;
  for (const Selection& s : result.selected) {
    if (s.pool_id >= instance.pool_count()) {
      flag(s.pool_id, ViolationKind::Structural, "pool id out of range");
      continue;
    }
    if (s.primer_index >= instance.pools()[s.pool_id].primers.size()) {
      flag(s.pool_id, ViolationKind::Structural, "primer index " + std::to_string(s.primer_index) + " out of range");
      continue;
    }
    if (!seen_pools.insert(s.pool_id).second) {
      flag(s.pool_id, ViolationKind::DuplicatePool, "pool selected more than once");
      continue;
    }
    reps.push_back(&s);
  }
  report.checked_pools = reps.size();

  std::unordered_map<ProbeId, std::uint32_t, ProbeHash> cover;
  std::vector<std::vector<ProbeId>> spectra(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Primer& p = instance.primer({reps[i]->pool_id, reps[i]->primer_index});
    for (ProbeId x : space.extended_spectrum(p.sequence, p.extensions)) ++cover[x];
    spectra[i] = space.spectrum(p.sequence);
  }

  std::unordered_map<ProbeId, std::uint32_t, ProbeHash> witness_owner;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Selection& s = *reps[i];
    std::size_t informative = 0;
    for (ProbeId x : spectra[i]) informative += cover[x] == 1;
    if (informative < r) {
      flag(s.pool_id, ViolationKind::NotDecodable,
           std::to_string(informative) + " informative probes, need " + std::to_string(r));
    }

    std::unordered_set<ProbeId, ProbeHash> distinct;
    for (ProbeId w : s.witnesses) {
      if (!distinct.insert(w).second) {
        flag(s.pool_id, ViolationKind::DuplicateWitness, "probe " + std::to_string(w.value) + " listed twice");
        continue;
      }
      const bool in_spectrum = std::binary_search(spectra[i].begin(), spectra[i].end(), w);
      if (!in_spectrum) {
        flag(s.pool_id, ViolationKind::WitnessNotInSpectrum,
             "probe " + std::to_string(w.value) + " does not hybridize to the representative");
      } else if (cover[w] > 1) {
        flag(s.pool_id, ViolationKind::WitnessCrossHybridizes,
             "probe " + std::to_string(w.value) + " hybridizes to another selected extended primer");
      }
      auto [it, fresh] = witness_owner.emplace(w, s.pool_id);
      if (!fresh) {
        flag(s.pool_id, ViolationKind::WitnessShared,
             "probe " + std::to_string(w.value) + " also claimed by pool " + std::to_string(it->second));
      }
    }
    if (distinct.size() < r) {
      flag(s.pool_id, ViolationKind::TooFewWitnesses,
           std::to_string(distinct.size()) + " witnesses listed, need " + std::to_string(r));
    }
  }
  return report;
}

}  // namespace sbesbh

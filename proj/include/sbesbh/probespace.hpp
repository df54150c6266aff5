#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sbesbh/dnaseq.hpp"

namespace sbesbh {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense probe identifier in 0..|X|-1.
struct ProbeId {
  std::uint64_t value = 0;
  friend constexpr auto operator<=>(ProbeId, ProbeId) = default;
};

enum class ProbeSpaceKind { AllKmers, AllCTokens, ExplicitList };

/// Number of strings over {A,C,G,T} of 2-4 weight exactly w.
std::uint64_t strings_of_weight(int w);

/// Number of c-tokens, from the closed recurrence 4 N(c-1) + 2 N(c-2).
std::uint64_t ctoken_count(int c);

/// weight(s) >= c and every proper suffix of s weighs less than c.
bool is_ctoken(const DnaString& s, int c);

/// A universal probe set X with a bijection onto 0..size()-1.
///
/// k-mers are identified by their base-4 ordinal (first base most significant).
/// c-tokens are identified by their rank in lexicographic order (A<C<G<T, a
/// proper prefix sorts before its extensions); rank and unrank are computed
/// combinatorially, so the roster is never materialized. Explicit lists keep
/// the order they were given in.
class ProbeSpace {
 public:
  static constexpr int kMaxK = 16;
  static constexpr int kMinC = 2;
  static constexpr int kMaxC = 20;

  static ProbeSpace kmers(int k);
  static ProbeSpace ctokens(int c);
  static ProbeSpace from_list(std::vector<DnaString> probes, std::string label = "list");

  // "kmer:<k>", "ctoken:<c>" or "list:<path>" (one probe per line, '#' comments).
  static ProbeSpace parse(std::string_view descriptor);

  ProbeSpaceKind kind() const noexcept { return kind_; }
  int parameter() const noexcept { return param_; }
  std::uint64_t size() const noexcept { return size_; }
  const std::string& descriptor() const noexcept { return descriptor_; }

  std::optional<ProbeId> id_of(const DnaString& probe) const;
  bool contains(const DnaString& probe) const { return id_of(probe).has_value(); }
  DnaString probe(ProbeId id) const;

  /// { x in X : reverse_complement(x) is a substring of y }, sorted, no duplicates.
  std::vector<ProbeId> spectrum(const DnaString& y) const;

  /// Union of spectrum(p e) over e in extensions.
  std::vector<ProbeId> extended_spectrum(const DnaString& p, BaseSet extensions) const;

 private:
  struct ListIndex;

  ProbeSpace() = default;

  void kmer_spectrum(const DnaString& y, std::vector<ProbeId>& out) const;
  void ctoken_spectrum(const DnaString& y, std::vector<ProbeId>& out) const;
  void list_spectrum(const DnaString& y, std::vector<ProbeId>& out) const;

  ProbeSpaceKind kind_ = ProbeSpaceKind::AllKmers;
  int param_ = 0;
  std::uint64_t size_ = 0;
  std::string descriptor_;
  std::shared_ptr<const ListIndex> list_;
};

/// Materializes the full roster in identifier order. c-tokens are produced by
/// an exhaustive right-to-left depth-first search followed by a sort, which
/// does not use the rank arithmetic. Refuses spaces larger than `cap`.
std::vector<DnaString> enumerate_probes(const ProbeSpace& space,
                                        std::uint64_t cap = std::uint64_t{1} << 26);

}  // namespace sbesbh

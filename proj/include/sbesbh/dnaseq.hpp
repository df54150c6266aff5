#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbesbh {

// Ordinal convention A=0, C=1, G=2, T=3. Probe identifiers depend on it.
enum class Base : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

inline constexpr Base kAllBases[4] = {Base::A, Base::C, Base::G, Base::T};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr Base complement(Base b) noexcept {
  return static_cast<Base>(3 - static_cast<std::uint8_t>(b));
}

constexpr int ordinal(Base b) noexcept { return static_cast<int>(b); }

constexpr char to_char(Base b) noexcept { return "ACGT"[ordinal(b)]; }

// 2-4 rule weight: A/T count 1, C/G count 2.
constexpr int weight(Base b) noexcept {
  return (b == Base::C || b == Base::G) ? 2 : 1;
}

// True iff c (case-insensitive) is not one of A, C, G, T.
bool is_degenerate(char c) noexcept;

// True iff c (case-insensitive) is an IUPAC nucleotide code, including N and U.
bool is_iupac(char c) noexcept;

// Throws ParseError when c is not a non-degenerate base.
Base base_from_char(char c);

/// A sequence over {A,C,G,T}, stored uppercase.
class DnaString {
 public:
  DnaString() = default;

  // Accepts mixed case; throws ParseError on any degenerate or non-IUPAC code.
  explicit DnaString(std::string_view text);

  static DnaString from_bases(const Base* first, std::size_t count);

  std::size_t size() const noexcept { return text_.size(); }
  bool empty() const noexcept { return text_.empty(); }
  Base operator[](std::size_t i) const noexcept { return decode(text_[i]); }
  const std::string& str() const noexcept { return text_; }

  DnaString substr(std::size_t pos, std::size_t count = std::string::npos) const;
  DnaString operator+(Base b) const;
  DnaString operator+(const DnaString& other) const;

  friend bool operator==(const DnaString&, const DnaString&) = default;
  friend auto operator<=>(const DnaString&, const DnaString&) = default;

 private:
  static Base decode(char c) noexcept {
    switch (c) {
      case 'A': return Base::A;
      case 'C': return Base::C;
      case 'G': return Base::G;
      default: return Base::T;
    }
  }

  std::string text_;
};

DnaString reverse_complement(const DnaString& s);

int weight(const DnaString& s) noexcept;

/// Subset of {A,C,G,T}; used for primer extension sets and SNP alleles.
class BaseSet {
 public:
  constexpr BaseSet() = default;
  constexpr explicit BaseSet(std::uint8_t mask) : mask_(mask & 0xF) {}

  // "TC" -> {C,T}. Throws ParseError on degenerate codes or duplicates.
  static BaseSet parse(std::string_view text);
  static constexpr BaseSet all() { return BaseSet(0xF); }

  constexpr bool contains(Base b) const noexcept { return mask_ & (1u << ordinal(b)); }
  constexpr void insert(Base b) noexcept { mask_ |= static_cast<std::uint8_t>(1u << ordinal(b)); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  int size() const noexcept;
  constexpr std::uint8_t mask() const noexcept { return mask_; }

  BaseSet complemented() const noexcept;
  // Bases in ordinal order, e.g. "CT".
  std::string str() const;

  friend constexpr bool operator==(BaseSet, BaseSet) = default;

 private:
  std::uint8_t mask_ = 0;
};

}  // namespace sbesbh

#include "sbesbh/dnaseq.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace sbesbh {

namespace {

char upper(char c) noexcept {
  return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

}  // namespace

bool is_degenerate(char c) noexcept {
  switch (upper(c)) {
    case 'A':
    case 'C':
    case 'G':
    case 'T':
      return false;
    default:
      return true;
  }
}

bool is_iupac(char c) noexcept {
  static constexpr std::string_view codes = "ACGTURYSWKMBDHVN";
  return codes.find(upper(c)) != std::string_view::npos;
}

Base base_from_char(char c) {
  switch (upper(c)) {
    case 'A': return Base::A;
    case 'C': return Base::C;
    case 'G': return Base::G;
    case 'T': return Base::T;
    default:
      break;
  }
  if (is_iupac(c)) {
    throw ParseError(std::string("degenerate base '") + c + "' where a concrete base is required");
  }
  throw ParseError(std::string("invalid nucleotide character '") + c + "'");
}

DnaString::DnaString(std::string_view text) {
  text_.reserve(text.size());
  for (char c : text) text_.push_back(to_char(base_from_char(c)));
}

DnaString DnaString::from_bases(const Base* first, std::size_t count) {
  DnaString s;
  s.text_.resize(count);
  for (std::size_t i = 0; i < count; ++i) s.text_[i] = to_char(first[i]);
  return s;
}

DnaString DnaString::substr(std::size_t pos, std::size_t count) const {
  DnaString s;
  s.text_ = text_.substr(pos, count);
  return s;
}

DnaString DnaString::operator+(Base b) const {
  DnaString s = *this;
  s.text_.push_back(to_char(b));
  return s;
}

DnaString DnaString::operator+(const DnaString& other) const {
  DnaString s = *this;
  s.text_ += other.text_;
  return s;
}

DnaString reverse_complement(const DnaString& s) {
  std::string out(s.size(), 'A');
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[s.size() - 1 - i] = to_char(complement(s[i]));
  }
  return DnaString(out);
}

int weight(const DnaString& s) noexcept {
  int w = 0;
  for (char c : s.str()) w += (c == 'C' || c == 'G') ? 2 : 1;
  return w;
}

BaseSet BaseSet::parse(std::string_view text) {
  BaseSet set;
  for (char c : text) {
    Base b = base_from_char(c);
    if (set.contains(b)) throw ParseError("duplicate base in set '" + std::string(text) + "'");
    set.insert(b);
  }
  return set;
}

int BaseSet::size() const noexcept { return std::popcount(static_cast<unsigned>(mask_)); }

BaseSet BaseSet::complemented() const noexcept {
  BaseSet out;
  for (Base b : kAllBases) {
    if (contains(b)) out.insert(complement(b));
  }
  return out;
}

std::string BaseSet::str() const {
  std::string s;
  for (Base b : kAllBases) {
    if (contains(b)) s.push_back(to_char(b));
  }
  return s;
}

}  // namespace sbesbh

#include "sbesbh/probespace.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <unordered_map>

namespace sbesbh {

namespace {

constexpr int kWeightTable = 2 * ProbeSpace::kMaxC + 4;

const std::array<std::uint64_t, kWeightTable>& weight_counts() {
  static const std::array<std::uint64_t, kWeightTable> table = [] {
    std::array<std::uint64_t, kWeightTable> n{};
    n[0] = 1;
    n[1] = 2;
    for (int w = 2; w < kWeightTable; ++w) n[w] = 2 * n[w - 1] + 2 * n[w - 2];
    return n;
  }();
  return table;
}

// Tokens having `prefix` (non-empty) as a prefix, counting `prefix` itself.
// A completion z qualifies iff c - w(prefix) <= w(z) <= c - 1 - w(prefix[1:]).
std::uint64_t tokens_with_prefix(int c, int prefix_weight, int first_weight) {
  const int rest = prefix_weight - first_weight;
  const int lo = std::max(0, c - prefix_weight);
  const int hi = c - 1 - rest;
  std::uint64_t total = 0;
  for (int w = lo; w <= hi; ++w) total += weight_counts()[w];
  return total;
}

std::uint64_t ctoken_rank(const Base* t, std::size_t m, int c) {
  std::uint64_t rank = 0;
  int prefix_w = 0;
  const int first_w = weight(t[0]);
  for (std::size_t i = 0; i < m; ++i) {
    for (Base b : kAllBases) {
      if (b == t[i]) break;
      const int fw = i == 0 ? weight(b) : first_w;
      rank += tokens_with_prefix(c, prefix_w + weight(b), fw);
    }
    prefix_w += weight(t[i]);
    // t[0..i] is itself a token once it reaches weight c.
    if (i + 1 < m && prefix_w >= c) ++rank;
  }
  return rank;
}

DnaString ctoken_unrank(std::uint64_t id, int c) {
  std::vector<Base> q;
  int prefix_w = 0;
  for (;;) {
    if (!q.empty() && prefix_w >= c) {
      if (id == 0) return DnaString::from_bases(q.data(), q.size());
      --id;
    }
    bool descended = false;
    for (Base b : kAllBases) {
      const int fw = q.empty() ? weight(b) : weight(q.front());
      const std::uint64_t n = tokens_with_prefix(c, prefix_w + weight(b), fw);
      if (id < n) {
        q.push_back(b);
        prefix_w += weight(b);
        descended = true;
        break;
      }
      id -= n;
    }
    if (!descended) throw std::out_of_range("c-token id out of range");
  }
}

std::uint64_t kmer_code(const DnaString& s) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < s.size(); ++i) code = (code << 2) | static_cast<std::uint64_t>(ordinal(s[i]));
  return code;
}

DnaString kmer_decode(std::uint64_t code, int k) {
  std::vector<Base> bases(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    bases[static_cast<std::size_t>(i)] = static_cast<Base>(code & 3u);
    code >>= 2;
  }
  return DnaString::from_bases(bases.data(), bases.size());
}

void sort_unique(std::vector<ProbeId>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

struct ProbeSpace::ListIndex {
  std::vector<DnaString> probes;
  // Keyed by the target substring, i.e. reverse_complement(probe).
  std::unordered_map<std::string, std::uint64_t> by_target;
  std::vector<std::size_t> lengths;
};

std::uint64_t strings_of_weight(int w) {
  if (w < 0) return 0;
  if (w >= kWeightTable) throw std::out_of_range("weight outside table");
  return weight_counts()[w];
}

std::uint64_t ctoken_count(int c) {
  if (c < 1) return 0;
  return 4 * strings_of_weight(c - 1) + 2 * strings_of_weight(c - 2);
}

bool is_ctoken(const DnaString& s, int c) {
  if (s.empty()) return false;
  const int total = weight(s);
  return total >= c && total - weight(s[0]) < c;
}

ProbeSpace ProbeSpace::kmers(int k) {
  if (k < 1 || k > kMaxK) {
    throw ConfigError("k-mer length must be in 1.." + std::to_string(kMaxK) + ", got " + std::to_string(k));
  }
  ProbeSpace space;
  space.kind_ = ProbeSpaceKind::AllKmers;
  space.param_ = k;
  space.size_ = std::uint64_t{1} << (2 * k);
  space.descriptor_ = "kmer:" + std::to_string(k);
  return space;
}

ProbeSpace ProbeSpace::ctokens(int c) {
  if (c < kMinC || c > kMaxC) {
    throw ConfigError("c-token weight must be in " + std::to_string(kMinC) + ".." + std::to_string(kMaxC) +
                      ", got " + std::to_string(c));
  }
  ProbeSpace space;
  space.kind_ = ProbeSpaceKind::AllCTokens;
  space.param_ = c;
  space.size_ = ctoken_count(c);
  space.descriptor_ = "ctoken:" + std::to_string(c);
  return space;
}

ProbeSpace ProbeSpace::from_list(std::vector<DnaString> probes, std::string label) {
  auto index = std::make_shared<ListIndex>();
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (probes[i].empty()) throw ConfigError("empty probe in list");
    auto [it, inserted] = index->by_target.emplace(reverse_complement(probes[i]).str(), i);
    if (!inserted) throw ConfigError("duplicate probe '" + probes[i].str() + "' in list");
    index->lengths.push_back(probes[i].size());
  }
  std::sort(index->lengths.begin(), index->lengths.end());
  index->lengths.erase(std::unique(index->lengths.begin(), index->lengths.end()), index->lengths.end());
  index->probes = std::move(probes);

  ProbeSpace space;
  space.kind_ = ProbeSpaceKind::ExplicitList;
  space.size_ = index->probes.size();
  space.descriptor_ = std::move(label);
  space.list_ = std::move(index);
  return space;
}

ProbeSpace ProbeSpace::parse(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("probe space must be kmer:<k>, ctoken:<c> or list:<path>, got '" + std::string(descriptor) + "'");
  }
  const std::string_view family = descriptor.substr(0, colon);
  const std::string_view arg = descriptor.substr(colon + 1);
  if (family == "kmer") return kmers(parse_int(arg, "k"));
  if (family == "ctoken") return ctokens(parse_int(arg, "c"));
  if (family == "list") {
    std::ifstream in{std::string(arg)};
    if (!in) throw ConfigError("cannot open probe list '" + std::string(arg) + "'");
    std::vector<DnaString> probes;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      // Accept either "probe" or "id<TAB>probe" (the roster format of `probes`).
      const auto tab = line.find('\t');
      const std::string field = tab == std::string::npos ? line : line.substr(tab + 1);
      try {
        probes.emplace_back(field);
      } catch (const ParseError& e) {
        throw ParseError(std::string(arg) + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
    return from_list(std::move(probes), std::string(descriptor));
  }
  throw ConfigError("unknown probe family '" + std::string(family) + "'");
}

std::optional<ProbeId> ProbeSpace::id_of(const DnaString& probe) const {
  switch (kind_) {
    case ProbeSpaceKind::AllKmers:
      if (probe.size() != static_cast<std::size_t>(param_)) return std::nullopt;
      return ProbeId{kmer_code(probe)};
    case ProbeSpaceKind::AllCTokens: {
      if (!is_ctoken(probe, param_)) return std::nullopt;
      std::vector<Base> bases(probe.size());
      for (std::size_t i = 0; i < probe.size(); ++i) bases[i] = probe[i];
      return ProbeId{ctoken_rank(bases.data(), bases.size(), param_)};
    }
    case ProbeSpaceKind::ExplicitList: {
      auto it = list_->by_target.find(reverse_complement(probe).str());
      if (it == list_->by_target.end()) return std::nullopt;
      return ProbeId{it->second};
    }
  }
  return std::nullopt;
}

DnaString ProbeSpace::probe(ProbeId id) const {
  if (id.value >= size_) throw std::out_of_range("probe id " + std::to_string(id.value) + " out of range");
  switch (kind_) {
    case ProbeSpaceKind::AllKmers: return kmer_decode(id.value, param_);
    case ProbeSpaceKind::AllCTokens: return ctoken_unrank(id.value, param_);
    case ProbeSpaceKind::ExplicitList: return list_->probes[id.value];
  }
  return {};
}

void ProbeSpace::kmer_spectrum(const DnaString& y, std::vector<ProbeId>& out) const {
  const auto k = static_cast<std::size_t>(param_);
  if (y.size() < k) return;
  // Code of reverse_complement(window) = sum_m complement(window[m]) * 4^m.
  const unsigned top = 2 * (param_ - 1);
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    code = (code >> 2) | (static_cast<std::uint64_t>(ordinal(complement(y[i]))) << top);
    if (i + 1 >= k) out.push_back(ProbeId{code});
  }
}

void ProbeSpace::ctoken_spectrum(const DnaString& y, std::vector<ProbeId>& out) const {
  // reverse_complement(s) is a token iff s reaches weight c exactly at its last
  // base (its suffixes are the complements of s's prefixes), so at most one
  // token starts at each position of y.
  std::vector<Base> bases(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) bases[i] = y[i];
  std::vector<Base> token;
  for (std::size_t start = 0; start < bases.size(); ++start) {
    int w = 0;
    std::size_t end = start;
    while (end < bases.size() && w < param_) w += weight(bases[end++]);
    if (w < param_) break;
    token.assign(end - start, Base::A);
    for (std::size_t j = start; j < end; ++j) token[end - 1 - j] = complement(bases[j]);
    out.push_back(ProbeId{ctoken_rank(token.data(), token.size(), param_)});
  }
}

void ProbeSpace::list_spectrum(const DnaString& y, std::vector<ProbeId>& out) const {
  const std::string& text = y.str();
  std::string window;
  for (std::size_t len : list_->lengths) {
    for (std::size_t i = 0; i + len <= text.size(); ++i) {
      window.assign(text, i, len);
      auto it = list_->by_target.find(window);
      if (it != list_->by_target.end()) out.push_back(ProbeId{it->second});
    }
  }
}

std::vector<ProbeId> ProbeSpace::spectrum(const DnaString& y) const {
  std::vector<ProbeId> out;
  switch (kind_) {
    case ProbeSpaceKind::AllKmers: kmer_spectrum(y, out); break;
    case ProbeSpaceKind::AllCTokens: ctoken_spectrum(y, out); break;
    case ProbeSpaceKind::ExplicitList: list_spectrum(y, out); break;
  }
  sort_unique(out);
  return out;
}

std::vector<ProbeId> ProbeSpace::extended_spectrum(const DnaString& p, BaseSet extensions) const {
  std::vector<ProbeId> out;
  for (Base e : kAllBases) {
    if (!extensions.contains(e)) continue;
    const DnaString extended = p + e;
    switch (kind_) {
      case ProbeSpaceKind::AllKmers: kmer_spectrum(extended, out); break;
      case ProbeSpaceKind::AllCTokens: ctoken_spectrum(extended, out); break;
      case ProbeSpaceKind::ExplicitList: list_spectrum(extended, out); break;
    }
  }
  sort_unique(out);
  return out;
}

namespace {

void ctoken_dfs(std::vector<Base>& suffix, int w, int c, std::vector<DnaString>& out) {
  // `suffix` is stored reversed: suffix.back() is the leftmost base.
  for (Base b : kAllBases) {
    suffix.push_back(b);
    const int nw = w + weight(b);
    if (nw >= c) {
      std::vector<Base> forward(suffix.rbegin(), suffix.rend());
      out.push_back(DnaString::from_bases(forward.data(), forward.size()));
    } else {
      ctoken_dfs(suffix, nw, c, out);
    }
    suffix.pop_back();
  }
}

}  // namespace

std::vector<DnaString> enumerate_probes(const ProbeSpace& space, std::uint64_t cap) {
  if (space.size() > cap) {
    throw ConfigError("probe space " + space.descriptor() + " has " + std::to_string(space.size()) +
                      " members, above the enumeration cap");
  }
  std::vector<DnaString> out;
  out.reserve(space.size());
  switch (space.kind()) {
    case ProbeSpaceKind::AllKmers:
      for (std::uint64_t code = 0; code < space.size(); ++code) out.push_back(kmer_decode(code, space.parameter()));
      break;
    case ProbeSpaceKind::AllCTokens: {
      std::vector<Base> suffix;
      ctoken_dfs(suffix, 0, space.parameter(), out);
      std::sort(out.begin(), out.end());
      break;
    }
    case ProbeSpaceKind::ExplicitList:
      for (std::uint64_t i = 0; i < space.size(); ++i) out.push_back(space.probe(ProbeId{i}));
      break;
  }
  return out;
}

}  // namespace sbesbh

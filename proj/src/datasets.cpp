#include "sbesbh/datasets.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <random>

namespace sbesbh {

ExtensionMode parse_extension_mode(std::string_view name) {
  if (name == "all4") return ExtensionMode::AllFour;
  if (name == "pair") return ExtensionMode::AllelePair;
  throw ConfigError("unknown extension mode '" + std::string(name) + "' (expected all4 or pair)");
}

const char* extension_mode_name(ExtensionMode m) noexcept {
  return m == ExtensionMode::AllFour ? "all4" : "pair";
}

std::vector<Pool> generate_random(const RandomSpec& spec) {
  if (spec.primers_per_pool < 1 || spec.primers_per_pool > 2) throw ConfigError("primers per pool must be 1 or 2");
  if (spec.primer_length < 1) throw ConfigError("primer length must be >= 1");

  static constexpr std::array<std::array<Base, 2>, 6> kPairs{{
      {Base::A, Base::C},
      {Base::A, Base::G},
      {Base::A, Base::T},
      {Base::C, Base::G},
      {Base::C, Base::T},
      {Base::G, Base::T},
  }};

  std::mt19937_64 rng(spec.rng_seed);
  std::vector<Pool> pools;
  pools.reserve(spec.n_pools);
  std::vector<Base> bases(static_cast<std::size_t>(spec.primer_length));
  for (std::size_t i = 0; i < spec.n_pools; ++i) {
    Pool pool;
    pool.id = static_cast<std::uint32_t>(i);
    BaseSet alleles = BaseSet::all();
    if (spec.extension_mode == ExtensionMode::AllelePair) {
      const auto& pair = kPairs[rng() % 6];
      alleles = BaseSet();
      alleles.insert(pair[0]);
      alleles.insert(pair[1]);
    }
    for (int j = 0; j < spec.primers_per_pool; ++j) {
      for (Base& b : bases) b = static_cast<Base>(rng() % 4);
      Primer primer;
      primer.sequence = DnaString::from_bases(bases.data(), bases.size());
      primer.pool_id = pool.id;
      primer.strand = j == 0 ? Strand::Forward : Strand::Reverse;
      if (spec.extension_mode == ExtensionMode::AllFour) {
        primer.extensions = BaseSet::all();
      } else {
        primer.extensions = j == 0 ? alleles.complemented() : alleles;
      }
      pool.primers.push_back(std::move(primer));
    }
    pools.push_back(std::move(pool));
  }
  return pools;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

void check_iupac(const std::string& text, const char* what) {
  for (char c : text) {
    if (!is_iupac(c)) throw ParseError(std::string("invalid character '") + c + "' in " + what);
  }
}

bool all_concrete(std::string_view window) {
  for (char c : window) {
    if (is_degenerate(c)) return false;
  }
  return true;
}

}  // namespace

SnpIngest load_snp_table(std::istream& in, int primer_length, const std::string& source) {
  if (primer_length < 1) throw ConfigError("primer length must be >= 1");
  const auto L = static_cast<std::size_t>(primer_length);
  SnpIngest out;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    if (!seen_data && !fields.empty() && (fields[0] == "id" || fields[0] == "ID")) {
      seen_data = true;
      continue;
    }
    seen_data = true;
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    if (fields.size() != 4) {
      throw ParseError(where + "expected 4 tab-separated fields, got " + std::to_string(fields.size()));
    }
    const std::string& id = fields[0];
    const std::string& left = fields[1];
    const std::string& allele_text = fields[2];
    const std::string& right = fields[3];
    try {
      check_iupac(left, "left flank");
      check_iupac(right, "right flank");
      check_iupac(allele_text, "alleles");
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }

    if (!all_concrete(allele_text)) {
      out.skipped.push_back({id, "degenerate allele code"});
      continue;
    }
    BaseSet alleles;
    try {
      alleles = BaseSet::parse(allele_text);
    } catch (const ParseError&) {
      out.skipped.push_back({id, "duplicate allele"});
      continue;
    }
    if (alleles.size() < 2) {
      out.skipped.push_back({id, "fewer than two alleles"});
      continue;
    }
    if (left.size() < L || right.size() < L) {
      out.skipped.push_back({id, "flank too short"});
      continue;
    }
    const std::string_view left_window = std::string_view(left).substr(left.size() - L);
    const std::string_view right_window = std::string_view(right).substr(0, L);
    if (!all_concrete(left_window) || !all_concrete(right_window)) {
      out.skipped.push_back({id, "degenerate base in primer window"});
      continue;
    }

    Pool pool;
    pool.id = static_cast<std::uint32_t>(out.pools.size());
    pool.primers.push_back(Primer{DnaString(left_window), alleles.complemented(), pool.id, Strand::Forward});
    pool.primers.push_back(
        Primer{reverse_complement(DnaString(right_window)), alleles, pool.id, Strand::Reverse});
    out.pools.push_back(std::move(pool));
    out.snp_ids.push_back(id);
  }
  return out;
}

SnpIngest load_snp_table_file(const std::string& path, int primer_length) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open SNP table '" + path + "'");
  return load_snp_table(in, primer_length, path);
}

}  // namespace sbesbh

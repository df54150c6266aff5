#include "sbesbh/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace sbesbh {

char strand_symbol(Strand s) noexcept {
  switch (s) {
    case Strand::Forward: return '+';
    case Strand::Reverse: return '-';
    case Strand::Unspecified: return '.';
  }
  return '.';
}

Strand parse_strand(std::string_view text) {
  if (text == "+") return Strand::Forward;
  if (text == "-") return Strand::Reverse;
  if (text == ".") return Strand::Unspecified;
  throw ParseError("invalid strand '" + std::string(text) + "' (expected +, - or .)");
}

void validate_pools(const std::vector<Pool>& pools) {
  for (std::size_t i = 0; i < pools.size(); ++i) {
    const Pool& pool = pools[i];
    if (pool.id != i) throw ParseError("pool ids must be dense 0..n-1; missing pool " + std::to_string(i));
    if (pool.primers.empty() || pool.primers.size() > 2) {
      throw ParseError("pool " + std::to_string(pool.id) + " must hold 1 or 2 primers");
    }
    for (const Primer& p : pool.primers) {
      if (p.pool_id != pool.id) throw ParseError("primer pool id mismatch in pool " + std::to_string(pool.id));
      if (p.extensions.empty()) throw ParseError("empty extension set in pool " + std::to_string(pool.id));
    }
    if (pool.primers.size() == 2 && pool.primers[0].strand == pool.primers[1].strand) {
      throw ParseError("pool " + std::to_string(pool.id) + " has two primers with the same strand tag");
    }
  }
}

ProblemInstance::ProblemInstance(std::vector<Pool> pools, ProbeSpace space, int redundancy)
    : pools_(std::move(pools)), space_(std::move(space)), redundancy_(redundancy) {
  if (redundancy_ < 1) throw ConfigError("redundancy must be >= 1");
  validate_pools(pools_);
  primer_offsets_.reserve(pools_.size() + 1);
  std::uint32_t offset = 0;
  for (const Pool& pool : pools_) {
    primer_offsets_.push_back(offset);
    offset += static_cast<std::uint32_t>(pool.primers.size());
  }
  primer_offsets_.push_back(offset);
}

PrimerRef ProblemInstance::ref_of(std::uint32_t global_index) const {
  auto it = std::upper_bound(primer_offsets_.begin(), primer_offsets_.end(), global_index);
  const auto pool = static_cast<std::uint32_t>(it - primer_offsets_.begin() - 1);
  return PrimerRef{pool, global_index - primer_offsets_[pool]};
}

ProblemInstance ProblemInstance::with(ProbeSpace space, int redundancy) const {
  return ProblemInstance(pools_, std::move(space), redundancy);
}

std::string ProblemInstance::fingerprint() const {
  const std::string text = pools_text(pools_);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SubInstance subinstance(const ProblemInstance& parent, const std::vector<std::uint32_t>& pool_ids) {
  std::vector<Pool> pools;
  pools.reserve(pool_ids.size());
  for (std::uint32_t id : pool_ids) {
    Pool pool = parent.pools().at(id);
    pool.id = static_cast<std::uint32_t>(pools.size());
    for (Primer& p : pool.primers) p.pool_id = pool.id;
    pools.push_back(std::move(pool));
  }
  return SubInstance{ProblemInstance(std::move(pools), parent.space(), parent.redundancy()), pool_ids};
}

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

}  // namespace

std::vector<Pool> read_pools(std::istream& in, const std::string& source) {
  std::map<std::uint32_t, Pool> by_id;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    try {
      const auto fields = split_tabs(line);
      if (fields.size() != 4) throw ParseError("expected 4 tab-separated fields, got " + std::to_string(fields.size()));
      std::uint32_t id = 0;
      auto [ptr, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), id);
      if (ec != std::errc() || ptr != fields[0].data() + fields[0].size()) {
        throw ParseError("invalid pool id '" + std::string(fields[0]) + "'");
      }
      Primer primer{DnaString(fields[2]), BaseSet::parse(fields[3]), id, parse_strand(fields[1])};
      if (primer.extensions.empty()) throw ParseError("empty extension set");
      Pool& pool = by_id[id];
      pool.id = id;
      pool.primers.push_back(std::move(primer));
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  std::vector<Pool> pools;
  pools.reserve(by_id.size());
  for (auto& [id, pool] : by_id) pools.push_back(std::move(pool));
  try {
    validate_pools(pools);
  } catch (const ParseError& e) {
    throw ParseError(source + ": " + e.what());
  }
  return pools;
}

std::vector<Pool> read_pools_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  return read_pools(in, path);
}

void write_pools(std::ostream& out, const std::vector<Pool>& pools) {
  for (const Pool& pool : pools) {
    for (const Primer& p : pool.primers) {
      out << pool.id << '\t' << strand_symbol(p.strand) << '\t' << p.sequence.str() << '\t' << p.extensions.str()
          << '\n';
    }
  }
}

std::string pools_text(const std::vector<Pool>& pools) {
  std::ostringstream out;
  write_pools(out, pools);
  return out.str();
}

}  // namespace sbesbh

#include "sbesbh/report.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

namespace sbesbh {

void Manifest::set(std::string key, std::string value) {
  for (auto& [k, v] : entries) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries.emplace_back(std::move(key), std::move(value));
}

const std::string* Manifest::find(const std::string& key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return &v;
  }
  return nullptr;
}

void write_manifest(std::ostream& out, const Manifest& manifest) {
  for (const auto& [k, v] : manifest.entries) out << "# " << k << '\t' << v << '\n';
}

namespace {

void write_selections(std::ostream& out, const DesignResult& design) {
  for (const Selection& s : design.selected) {
    out << s.pool_id << '\t' << s.primer_index << '\t';
    if (s.witnesses.empty()) out << '-';
    for (std::size_t i = 0; i < s.witnesses.size(); ++i) {
      if (i) out << ',';
      out << s.witnesses[i].value;
    }
    out << '\n';
  }
}

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, const std::string& where) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(where + "invalid number '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

void write_design(std::ostream& out, const DesignResult& design, std::size_t pool_count) {
  out << "# columns\tpool_id\tprimer_index\twitness_probe_ids\n";
  write_selections(out, design);
  out << "# selected\t" << design.size() << "\tof\t" << pool_count << '\n';
}

void write_partition(std::ostream& out, const PartitionReport& report) {
  for (std::size_t i = 0; i < report.arrays.size(); ++i) {
    out << "# array\t" << i + 1 << '\t' << report.arrays[i].fingerprint << '\n';
    write_selections(out, report.arrays[i]);
  }
  const auto curve = coverage_curve(report);
  const auto curve_decodable = coverage_curve_decodable(report);
  out << "# coverage\n";
  out << "array\tcumulative_fraction\tdecodable_fraction\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out << curve[i].array_index << '\t' << fixed6(curve[i].fraction) << '\t'
        << (i < curve_decodable.size() ? fixed6(curve_decodable[i].fraction) : std::string("nan")) << '\n';
  }
  out << "# uncovered\t" << report.uncovered.size() << '\n';
  for (auto id : report.uncovered) out << id << '\n';
  out << "# unassigned\t" << report.unassigned.size() << '\n';
  for (auto id : report.unassigned) out << id << '\n';
  out << "# summary\tarrays\t" << report.arrays.size() << "\tcovered\t" << report.covered() << "\tpools\t"
      << report.total_pools << "\tuncovered\t" << report.uncovered.size() << "\tforced\t" << report.forced_arrays
      << '\n';
}

ParsedReport read_report(std::istream& in, const std::string& source) {
  enum class Section { Design, Coverage, Uncovered, Unassigned, Other };
  ParsedReport report;
  Section section = Section::Design;
  bool in_body = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    if (line.front() == '#') {
      std::string_view body = std::string_view(line).substr(1);
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      const auto fields = split(body, '\t');
      const std::string key(fields[0]);
      if (key == "array") {
        report.partition = true;
        in_body = true;
        section = Section::Design;
        DesignResult d;
        if (fields.size() > 2) d.fingerprint = std::string(fields[2]);
        report.designs.push_back(std::move(d));
      } else if (key == "coverage") {
        section = Section::Coverage;
      } else if (key == "uncovered") {
        section = Section::Uncovered;
      } else if (key == "unassigned") {
        section = Section::Unassigned;
      } else if (key == "columns" || key == "selected" || key == "summary") {
        in_body = true;
      } else if (!in_body && fields.size() >= 2) {
        std::string value(fields[1]);
        for (std::size_t i = 2; i < fields.size(); ++i) value += "\t" + std::string(fields[i]);
        report.manifest.set(key, value);
      }
      continue;
    }
    in_body = true;
    switch (section) {
      case Section::Design: {
        const auto fields = split(line, '\t');
        if (fields.size() != 3) throw ParseError(where + "expected pool_id<TAB>primer_index<TAB>witnesses");
        if (report.designs.empty()) {
          DesignResult d;
          if (const auto* fp = report.manifest.find("instance")) d.fingerprint = *fp;
          report.designs.push_back(std::move(d));
        }
        Selection s;
        s.pool_id = parse_number<std::uint32_t>(fields[0], where);
        s.primer_index = parse_number<std::uint32_t>(fields[1], where);
        if (fields[2] != "-" && !fields[2].empty()) {
          for (auto w : split(fields[2], ',')) s.witnesses.push_back(ProbeId{parse_number<std::uint64_t>(w, where)});
        }
        report.designs.back().selected.push_back(std::move(s));
        break;
      }
      case Section::Uncovered:
        report.uncovered.push_back(parse_number<std::uint32_t>(line, where));
        break;
      case Section::Unassigned:
        report.unassigned.push_back(parse_number<std::uint32_t>(line, where));
        break;
      case Section::Coverage:
      case Section::Other:
        break;
    }
  }
  if (report.designs.empty()) {
    DesignResult d;
    if (const auto* fp = report.manifest.find("instance")) d.fingerprint = *fp;
    report.designs.push_back(std::move(d));
  }
  return report;
}

}  // namespace sbesbh

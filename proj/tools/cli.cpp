#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "sbesbh/datasets.hpp"
#include "sbesbh/decodability.hpp"
#include "sbesbh/oracles.hpp"
#include "sbesbh/partitioner.hpp"
#include "sbesbh/probespace.hpp"
#include "sbesbh/report.hpp"
#include "sbesbh/solvers.hpp"

#ifndef SBESBH_VERSION
#define SBESBH_VERSION "0.0.0"
#endif

namespace sbesbh {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string probes;
  std::vector<std::string> probe_list;
  int redundancy = 1;
  std::vector<int> redundancy_list;
  std::string algorithm = "seq";
  std::vector<std::string> algorithm_list;
  std::string degree = "total";
  std::size_t pools = 1000;
  std::vector<std::size_t> pools_list;
  int primer_length = 20;
  int primers_per_pool = 1;
  std::vector<int> primers_per_pool_list;
  std::string extensions = "all4";
  std::vector<std::string> extensions_list;
  std::uint64_t seed = 1;
  int replicates = 10;
  std::size_t max_arrays = 0;
  std::string in;
  std::string out;
  std::string design;
  std::string probe_list_out;
  bool roster = false;
  bool timing = false;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

/// Output sink: --out path or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ConfigError("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

std::vector<Pool> load_pools(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_pools(in, "<stdin>");
  return read_pools_file(path);
}

Manifest base_manifest(const std::string& command, const std::vector<std::string>& args) {
  Manifest m;
  m.set("tool", std::string("sbesbh ") + SBESBH_VERSION);
  std::string line;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (i > 1) line += ' ';
    line += args[i];
  }
  m.set("command", command);
  m.set("args", line);
  return m;
}

int cmd_probes(const Options& o, Manifest m, std::ostream& out) {
  const ProbeSpace space = ProbeSpace::parse(o.probes);
  Sink sink(o.out, out);
  m.set("probes", space.descriptor());
  m.set("size", std::to_string(space.size()));
  write_manifest(sink.get(), m);
  if (o.roster) {
    for (std::uint64_t id = 0; id < space.size(); ++id) {
      sink.get() << id << '\t' << space.probe(ProbeId{id}).str() << '\n';
    }
  }
  return kExitOk;
}

int cmd_gen(const Options& o, Manifest m, std::ostream& out) {
  RandomSpec spec;
  spec.n_pools = o.pools;
  spec.primers_per_pool = o.primers_per_pool;
  spec.primer_length = o.primer_length;
  spec.extension_mode = parse_extension_mode(o.extensions);
  spec.rng_seed = o.seed;
  const auto pools = generate_random(spec);
  Sink sink(o.out, out);
  m.set("generator", "mt19937_64");
  m.set("seed", std::to_string(o.seed));
  write_manifest(sink.get(), m);
  write_pools(sink.get(), pools);
  return kExitOk;
}

int cmd_ingest(const Options& o, Manifest m, std::istream& in, std::ostream& out) {
  const SnpIngest ingest = o.in.empty() || o.in == "-" ? load_snp_table(in, o.primer_length, "<stdin>")
                                                       : load_snp_table_file(o.in, o.primer_length);
  Sink sink(o.out, out);
  m.set("primer_length", std::to_string(o.primer_length));
  m.set("ingested", std::to_string(ingest.pools.size()));
  m.set("skipped", std::to_string(ingest.skipped.size()));
  write_manifest(sink.get(), m);
  for (std::size_t i = 0; i < ingest.snp_ids.size(); ++i) sink.get() << "# snp\t" << i << '\t' << ingest.snp_ids[i] << '\n';
  for (const auto& s : ingest.skipped) sink.get() << "# skipped_record\t" << s.id << '\t' << s.reason << '\n';
  write_pools(sink.get(), ingest.pools);
  return kExitOk;
}

ProblemInstance load_instance(const Options& o, std::istream& in) {
  return ProblemInstance(load_pools(o.in, in), ProbeSpace::parse(o.probes), o.redundancy);
}

int cmd_solve(const Options& o, Manifest m, std::istream& in, std::ostream& out, std::ostream& err) {
  const ProblemInstance instance = load_instance(o, in);
  SolverConfig config{parse_algorithm(o.algorithm), parse_degree_mode(o.degree)};
  const auto start = Clock::now();
  const DesignResult result = solve(instance, config);
  const double elapsed = seconds_since(start);

  Sink sink(o.out, out);
  m.set("algorithm", algorithm_name(config.algorithm));
  m.set("degree", degree_mode_name(config.degree_mode));
  m.set("probes", instance.space().descriptor());
  m.set("redundancy", std::to_string(instance.redundancy()));
  m.set("instance", instance.fingerprint());
  m.set("pruned_primers", std::to_string(result.pruned_primers));
  if (o.timing) m.set("elapsed_seconds", format_seconds(elapsed));
  write_manifest(sink.get(), m);
  write_design(sink.get(), result, instance.pool_count());
  err << "selected " << result.size() << " of " << instance.pool_count() << " pools in " << format_seconds(elapsed)
      << " s\n";
  return kExitOk;
}

int cmd_partition(const Options& o, Manifest m, std::istream& in, std::ostream& out, std::ostream& err) {
  const ProblemInstance instance = load_instance(o, in);
  SolverConfig config{parse_algorithm(o.algorithm), parse_degree_mode(o.degree)};
  std::optional<std::size_t> max_arrays;
  if (o.max_arrays > 0) max_arrays = o.max_arrays;
  const auto start = Clock::now();
  const PartitionReport report = partition(instance, config, max_arrays);
  const double elapsed = seconds_since(start);

  Sink sink(o.out, out);
  m.set("algorithm", algorithm_name(config.algorithm));
  m.set("degree", degree_mode_name(config.degree_mode));
  m.set("probes", instance.space().descriptor());
  m.set("redundancy", std::to_string(instance.redundancy()));
  m.set("instance", instance.fingerprint());
  if (o.timing) m.set("elapsed_seconds", format_seconds(elapsed));
  write_manifest(sink.get(), m);
  write_partition(sink.get(), report);
  err << report.arrays.size() << " arrays cover " << report.covered() << " of " << report.total_pools << " pools in "
      << format_seconds(elapsed) << " s\n";
  return kExitOk;
}

int cmd_verify(const Options& o, Manifest m, std::istream& in, std::ostream& out) {
  ParsedReport parsed;
  if (o.design.empty() || o.design == "-") {
    parsed = read_report(in, "<stdin>");
  } else {
    std::ifstream file(o.design);
    if (!file) throw ConfigError("cannot open design file '" + o.design + "'");
    parsed = read_report(file, o.design);
  }
  if (o.in.empty() || o.in == "-") {
    if (o.design.empty() || o.design == "-") throw ConfigError("verify needs --in or --design from a file");
  }

  std::string probes = o.probes;
  if (probes.empty()) {
    if (const auto* p = parsed.manifest.find("probes")) probes = *p;
  }
  if (probes.empty()) throw ConfigError("probe space unknown: pass --probes or verify a report with a manifest");
  int redundancy = o.redundancy_list.empty() ? 0 : o.redundancy_list.front();
  if (redundancy == 0) {
    const auto* r = parsed.manifest.find("redundancy");
    if (!r) throw ConfigError("redundancy unknown: pass --redundancy or verify a report with a manifest");
    redundancy = std::stoi(*r);
  }
  const ProblemInstance instance(load_pools(o.in, in), ProbeSpace::parse(probes), redundancy);

  VerificationReport total;
  if (!parsed.partition) {
    total = verify_design(parsed.designs.front(), instance);
  } else {
    std::set<std::uint32_t> seen;
    auto claim = [&](std::uint32_t id) {
      if (id >= instance.pool_count()) {
        total.violations.push_back({id, ViolationKind::Structural, "pool id out of range"});
        return false;
      }
      if (!seen.insert(id).second) {
        total.violations.push_back({id, ViolationKind::DuplicatePool, "pool listed more than once in the partition"});
        return false;
      }
      return true;
    };
    for (std::size_t a = 0; a < parsed.designs.size(); ++a) {
      bool clean = true;
      for (const Selection& s : parsed.designs[a].selected) clean = claim(s.pool_id) && clean;
      if (!clean) continue;
      const LocalizedDesign local = localize(parsed.designs[a], instance);
      VerificationReport part = verify_design(local.design, local.sub.instance);
      for (Violation v : part.violations) {
        if (v.pool_id) v.pool_id = local.sub.original_ids.at(*v.pool_id);
        v.detail = "array " + std::to_string(a + 1) + ": " + v.detail;
        total.violations.push_back(std::move(v));
      }
      total.checked_pools += part.checked_pools;
    }
    for (auto id : parsed.uncovered) claim(id);
    for (auto id : parsed.unassigned) claim(id);
    if (seen.size() != instance.pool_count()) {
      total.violations.push_back({std::nullopt, ViolationKind::Structural,
                                  std::to_string(instance.pool_count() - seen.size()) + " pools missing from the partition"});
    }
  }

  Sink sink(o.out, out);
  m.set("probes", instance.space().descriptor());
  m.set("redundancy", std::to_string(redundancy));
  m.set("instance", instance.fingerprint());
  write_manifest(sink.get(), m);
  sink.get() << total.to_text();
  return total.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_reduce(const Options& o, Manifest m, std::istream& in, std::ostream& out) {
  BipartiteGraph g;
  if (o.in.empty() || o.in == "-") {
    g = read_edge_list(in, "<stdin>");
  } else {
    std::ifstream file(o.in);
    if (!file) throw ConfigError("cannot open edge list '" + o.in + "'");
    g = read_edge_list(file, o.in);
  }
  const ReductionOutput red = reduce_mim_to_mdpsp(g);
  if (!o.probe_list_out.empty()) {
    std::ofstream probes(o.probe_list_out, std::ios::binary);
    if (!probes) throw ConfigError("cannot open probe list output '" + o.probe_list_out + "'");
    probes << "# reverse complements of the assigned words x_v, one per right vertex\n";
    for (std::uint64_t v = 0; v < red.instance.space().size(); ++v) {
      probes << red.instance.space().probe(ProbeId{v}).str() << '\n';
    }
    m.set("probes", "list:" + o.probe_list_out);
  }
  m.set("redundancy", "1");
  m.set("probe_length", std::to_string(red.probe_length));
  m.set("left", std::to_string(g.left));
  m.set("right", std::to_string(g.right));
  Sink sink(o.out, out);
  write_manifest(sink.get(), m);
  for (std::size_t v = 0; v < red.probe_assignment.size(); ++v) {
    sink.get() << "# x_v\t" << v << '\t' << red.probe_assignment[v].str() << '\n';
  }
  write_pools(sink.get(), red.instance.pools());
  return kExitOk;
}

int cmd_bench(const Options& o, Manifest m, std::ostream& out, std::ostream& err) {
  const std::vector<std::string> probes = o.probe_list.empty() ? std::vector<std::string>{"kmer:8"} : o.probe_list;
  const std::vector<int> rs = o.redundancy_list.empty() ? std::vector<int>{1} : o.redundancy_list;
  const std::vector<std::size_t> sizes = o.pools_list.empty() ? std::vector<std::size_t>{o.pools} : o.pools_list;
  const std::vector<std::string> algos =
      o.algorithm_list.empty() ? std::vector<std::string>{"seq", "minprimer", "minprobe"} : o.algorithm_list;
  const std::vector<int> ppps =
      o.primers_per_pool_list.empty() ? std::vector<int>{o.primers_per_pool} : o.primers_per_pool_list;
  const std::vector<std::string> exts =
      o.extensions_list.empty() ? std::vector<std::string>{o.extensions} : o.extensions_list;
  if (o.replicates < 1) throw ConfigError("replicates must be >= 1");

  std::vector<ProbeSpace> spaces;
  for (const auto& p : probes) spaces.push_back(ProbeSpace::parse(p));
  std::vector<Algorithm> algorithms;
  for (const auto& a : algos) algorithms.push_back(parse_algorithm(a));
  const DegreeMode mode = parse_degree_mode(o.degree);

  struct Column {
    std::size_t space;
    int ppp;
    ExtensionMode ext;
    std::string label;
  };
  std::vector<Column> columns;
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    for (int ppp : ppps) {
      for (const auto& e : exts) {
        const ExtensionMode ext = parse_extension_mode(e);
        std::string label = spaces[s].descriptor();
        if (ppps.size() > 1 || exts.size() > 1) {
          label += "," + std::to_string(ppp) + "p," + extension_mode_name(ext);
        }
        columns.push_back({s, ppp, ext, label});
      }
    }
  }

  // sums[r][n][algorithm][column]
  std::map<std::tuple<int, std::size_t, std::size_t, std::size_t>, double> sums;
  std::size_t failures = 0;
  const auto start = Clock::now();
  for (std::size_t n : sizes) {
    for (const Column& col : columns) {
      for (int rep = 0; rep < o.replicates; ++rep) {
        RandomSpec spec{n, col.ppp, o.primer_length, col.ext, o.seed + static_cast<std::uint64_t>(rep)};
        const auto pools = generate_random(spec);
        for (int r : rs) {
          const ProblemInstance instance(pools, spaces[col.space], r);
          for (std::size_t a = 0; a < algorithms.size(); ++a) {
            const DesignResult d = solve(instance, {algorithms[a], mode});
            if (!verify_design(d, instance).ok()) ++failures;
            sums[{r, n, a, static_cast<std::size_t>(&col - columns.data())}] += static_cast<double>(d.size());
          }
        }
      }
    }
  }

  Sink sink(o.out, out);
  m.set("replicates", std::to_string(o.replicates));
  m.set("primer_length", std::to_string(o.primer_length));
  m.set("seed", std::to_string(o.seed));
  m.set("degree", degree_mode_name(mode));
  m.set("verification_failures", std::to_string(failures));
  if (o.timing) m.set("elapsed_seconds", format_seconds(seconds_since(start)));
  write_manifest(sink.get(), m);
  auto& os = sink.get();
  os << "r\tpools\talgorithm";
  for (const Column& c : columns) os << '\t' << c.label;
  os << '\n';
  for (int r : rs) {
    for (std::size_t n : sizes) {
      for (std::size_t a = 0; a < algorithms.size(); ++a) {
        os << r << '\t' << n << '\t' << algorithm_name(algorithms[a]);
        for (std::size_t c = 0; c < columns.size(); ++c) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.1f", sums[{r, n, a, c}] / o.replicates);
          os << '\t' << buf;
        }
        os << '\n';
      }
    }
  }
  err << "bench finished in " << format_seconds(seconds_since(start)) << " s\n";
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplexed SBE/SBH genotyping assay design", "sbesbh"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(SBESBH_VERSION));
  Options o;

  auto add_in = [&](CLI::App* c, const std::string& what) { c->add_option("--in", o.in, what); };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "Output path (default: standard output)"); };
  auto add_solver = [&](CLI::App* c) {
    c->add_option("--probes", o.probes, "kmer:<k> | ctoken:<c> | list:<path>")->required();
    c->add_option("--redundancy", o.redundancy, "Informative probes required per pool")->check(CLI::PositiveNumber);
    c->add_option("--algorithm", o.algorithm, "seq | minprimer | minprobe");
    c->add_option("--degree", o.degree, "total | positive");
    c->add_flag("--timing", o.timing, "Record elapsed time in the manifest");
  };

  auto* probes = app.add_subcommand("probes", "Describe a universal probe space");
  probes->add_option("--probes", o.probes, "kmer:<k> | ctoken:<c> | list:<path>")->required();
  probes->add_flag("--roster", o.roster, "Print every probe with its id");
  add_out(probes);

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--pools", o.pools, "Number of pools");
  gen->add_option("--primer-length", o.primer_length, "Primer length")->check(CLI::PositiveNumber);
  gen->add_option("--primers-per-pool", o.primers_per_pool, "1 or 2")->check(CLI::Range(1, 2));
  gen->add_option("--extensions", o.extensions, "all4 | pair");
  gen->add_option("--seed", o.seed, "Generator seed");
  add_out(gen);

  auto* ingest = app.add_subcommand("ingest", "Build two-primer pools from a SNP flank table");
  add_in(ingest, "SNP table (id, left flank, alleles, right flank)");
  ingest->add_option("--primer-length", o.primer_length, "Primer length")->check(CLI::PositiveNumber);
  add_out(ingest);

  auto* solve_cmd = app.add_subcommand("solve", "Select a maximum strongly r-decodable pool subset");
  add_in(solve_cmd, "Instance file (default: standard input)");
  add_solver(solve_cmd);
  add_out(solve_cmd);

  auto* part = app.add_subcommand("partition", "Split all pools across arrays");
  add_in(part, "Instance file (default: standard input)");
  add_solver(part);
  part->add_option("--max-arrays", o.max_arrays, "Stop after this many arrays");
  add_out(part);

  auto* verify = app.add_subcommand("verify", "Check a solve or partition report against its instance");
  add_in(verify, "Instance file");
  verify->add_option("--design", o.design, "Report to check (default: standard input)");
  verify->add_option("--probes", o.probes, "Override the report's probe space");
  verify->add_option("--redundancy", o.redundancy_list, "Override the report's redundancy")->expected(1);
  add_out(verify);

  auto* reduce = app.add_subcommand("reduce", "Reduce a bipartite induced-matching instance to pool selection");
  add_in(reduce, "Edge list u<TAB>v");
  reduce->add_option("--probe-list-out", o.probe_list_out, "Write the probe list for list:<path>");
  add_out(reduce);

  auto* bench = app.add_subcommand("bench", "Average selected pools over a grid of random instances");
  bench->add_option("--probes", o.probe_list, "Comma-separated probe spaces")->delimiter(',');
  bench->add_option("--redundancy", o.redundancy_list, "Comma-separated redundancies")->delimiter(',');
  bench->add_option("--pools", o.pools_list, "Comma-separated pool counts")->delimiter(',');
  bench->add_option("--algorithm", o.algorithm_list, "Comma-separated algorithms")->delimiter(',');
  bench->add_option("--degree", o.degree, "total | positive");
  bench->add_option("--primer-length", o.primer_length, "Primer length")->check(CLI::PositiveNumber);
  bench->add_option("--primers-per-pool", o.primers_per_pool_list, "Comma-separated, 1 or 2")->delimiter(',');
  bench->add_option("--extensions", o.extensions_list, "Comma-separated all4 | pair")->delimiter(',');
  bench->add_option("--seed", o.seed, "Seed of the first replicate");
  bench->add_option("--replicates", o.replicates, "Instances per grid cell");
  bench->add_flag("--timing", o.timing, "Record elapsed time in the manifest");
  add_out(bench);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    Manifest m = base_manifest(cmd->get_name(), args);
    const std::string& name = cmd->get_name();
    if (name == "probes") return cmd_probes(o, m, out);
    if (name == "gen") return cmd_gen(o, m, out);
    if (name == "ingest") return cmd_ingest(o, m, in, out);
    if (name == "solve") return cmd_solve(o, m, in, out, err);
    if (name == "partition") return cmd_partition(o, m, in, out, err);
    if (name == "verify") return cmd_verify(o, m, in, out);
    if (name == "reduce") return cmd_reduce(o, m, in, out);
    if (name == "bench") return cmd_bench(o, m, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "size error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sbesbh

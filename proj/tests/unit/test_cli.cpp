#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "sbesbh");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = sbesbh::cli_main(args, in, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "sbesbh_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
  return path.string();
}

// Body lines without the manifest.
std::string strip_manifest(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  bool body = false;
  while (std::getline(in, line)) {
    if (!body && line.rfind("# ", 0) == 0 && line.find("columns") == std::string::npos &&
        line.find("array") == std::string::npos) {
      continue;
    }
    body = true;
    out += line + "\n";
  }
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("probe space summary") {
  const Run r = run({"probes", "--probes", "ctoken:13"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# size\t645376") != std::string::npos);
  const Run roster = run({"probes", "--probes", "kmer:2", "--roster"});
  CHECK(roster.out.find("0\tAA\n") != std::string::npos);
  CHECK(roster.out.find("15\tTT\n") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"solve", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"solve", "--probes", "kmer:99"}, "").code == 2);
  CHECK(run({"solve", "--probes", "kmer:3"}, "0\t+\tACNT\tA\n").code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("empty instance pipeline") {
  const Run gen = run({"gen", "--pools", "0"});
  REQUIRE(gen.code == 0);
  const Run solve = run({"solve", "--probes", "kmer:8"}, gen.out);
  CHECK(solve.code == 0);
  CHECK(solve.out.find("# selected\t0\tof\t0") != std::string::npos);
}

TEST_CASE("gen, solve and verify compose") {
  const fs::path dir = scratch();
  for (const char* algo : {"seq", "minprimer", "minprobe"}) {
    for (const char* ext : {"all4", "pair"}) {
      const Run gen = run({"gen", "--pools", "300", "--primers-per-pool", "2", "--extensions", ext, "--seed", "4"});
      REQUIRE(gen.code == 0);
      const std::string inst = write(dir / "inst.tsv", gen.out);
      const Run solve = run({"solve", "--in", inst, "--probes", "kmer:5", "--redundancy", "2", "--algorithm", algo});
      REQUIRE(solve.code == 0);
      const Run verify = run({"verify", "--in", inst}, solve.out);
      CHECK(verify.code == 0);
      CHECK(verify.out.find("# violations\t0") != std::string::npos);
    }
  }
}

TEST_CASE("verify rejects a tampered design") {
  const fs::path dir = scratch();
  const std::string inst = write(dir / "tamper.tsv", run({"gen", "--pools", "50", "--seed", "2"}).out);
  const Run solve = run({"solve", "--in", inst, "--probes", "kmer:6"});
  REQUIRE(solve.code == 0);
  std::string design = solve.out;
  const auto pos = design.find("\n0\t0\t");
  REQUIRE(pos != std::string::npos);
  design.insert(pos + 1, "0\t0\t1\n");
  const Run verify = run({"verify", "--in", inst}, design);
  CHECK(verify.code == 1);
  CHECK(verify.out.find("duplicate_pool") != std::string::npos);
}

TEST_CASE("partition reports verify") {
  const fs::path dir = scratch();
  const std::string inst = write(dir / "part.tsv", run({"gen", "--pools", "400", "--primer-length", "10"}).out);
  const Run part = run({"partition", "--in", inst, "--probes", "kmer:4", "--redundancy", "2"});
  REQUIRE(part.code == 0);
  CHECK(part.out.find("# coverage") != std::string::npos);
  CHECK(run({"verify", "--in", inst}, part.out).code == 0);
  const Run capped = run({"partition", "--in", inst, "--probes", "kmer:4", "--redundancy", "2", "--max-arrays", "1"});
  CHECK(capped.out.find("# array\t2") == std::string::npos);
  CHECK(run({"verify", "--in", inst}, capped.out).code == 0);
}

TEST_CASE("ingest writes pools and skipped records") {
  const std::string table =
      "rs1\tGATTACAGATTACACCGGTTAAC\tAG\tCCGGATTACATTGGCCAAGTTC\n"
      "rs2\tGATTACA\tAG\tCCGGATTACATTGGCCAAGTTC\n";
  const Run r = run({"ingest", "--primer-length", "20"}, table);
  CHECK(r.code == 0);
  CHECK(r.out.find("# skipped_record\trs2\tflank too short") != std::string::npos);
  CHECK(r.out.find("0\t+\tTACAGATTACACCGGTTAAC\tCT\n") != std::string::npos);
}

TEST_CASE("reduce emits an instance whose probe list solves") {
  const fs::path dir = scratch();
  const std::string list = (dir / "probes.txt").string();
  const Run red = run({"reduce", "--probe-list-out", list}, "0\t0\n1\t1\n");
  REQUIRE(red.code == 0);
  const std::string inst = write(dir / "reduced.tsv", red.out);
  const Run solve = run({"solve", "--in", inst, "--probes", "list:" + list});
  REQUIRE(solve.code == 0);
  CHECK(solve.out.find("# selected\t2\tof\t2") != std::string::npos);
  CHECK(run({"verify", "--in", inst}, solve.out).code == 0);
}

TEST_CASE("bench table shape") {
  const Run r = run({"bench", "--probes", "kmer:4,kmer:5", "--redundancy", "1,2", "--pools", "100", "--replicates", "2",
                     "--primer-length", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("r\tpools\talgorithm\tkmer:4\tkmer:5\n") != std::string::npos);
  CHECK(r.out.find("\n2\t100\tminprobe\t") != std::string::npos);
}

TEST_CASE("identical runs give identical bytes") {
  const fs::path dir = scratch();
  const std::string inst = write(dir / "det.tsv", run({"gen", "--pools", "200", "--seed", "9"}).out);
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"solve", "--in", inst, "--probes", "kmer:5", "--algorithm", "minprobe"},
        std::vector<std::string>{"partition", "--in", inst, "--probes", "ctoken:7"}}) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.out == b.out);
    CHECK_FALSE(strip_manifest(a.out).empty());
  }
}

}

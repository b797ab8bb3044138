#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "invsr/cli.hpp"
#include "invsr/document.hpp"
#include "invsr/generators.hpp"
#include "invsr/report.hpp"

using namespace invsr;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int rc = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int rc = run_cli(args, in, out, err);
  return {rc, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto p = fs::temp_directory_path() / ("invsr-cli-" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

std::string doc_file(const std::string& name, const SemigroupDocument& d) {
  return write(name, emit_document(d));
}

}  // namespace

TEST_CASE("gen and product reproduce the example") {
  const auto z3 = cli({"gen", "zmod-mul", "3"});
  REQUIRE(z3.rc == kExitOk);
  const auto p = cli({"product", "chain", "2"}, z3.out);
  REQUIRE(p.rc == kExitOk);
  const auto d = parse_document(p.out);
  CHECK(d.elements.size() == 6);
  const auto v = cli({"validate", "-"}, p.out);
  CHECK(v.rc == kExitOk);
  CHECK(v.out.find("valid: yes") != std::string::npos);
}

TEST_CASE("exit codes") {
  const auto good = doc_file("chain2.json", builtin_semigroup("chain", 2));
  CHECK(cli({"info", good}).rc == kExitOk);

  SemigroupDocument band;
  band.name = "left-zero";
  band.elements = {"a", "b"};
  band.table = {{0, 0}, {1, 1}};
  const auto bad = doc_file("band.json", band);
  const auto v = cli({"--format", "json", "validate", bad});
  CHECK(v.rc == kExitInput);
  const auto j = json::parse(v.out);
  CHECK(j["result"]["valid"] == false);
  CHECK(j["result"]["failures"][0]["axiom"] == "commutativity");
  CHECK(j["result"]["failures"][0]["witness"] == json::array({"a", "b"}));
  CHECK(cli({"info", bad}).rc == kExitInput);

  CHECK(cli({"info", write("broken.json", "{\"name\": ")}).rc == kExitInput);
  CHECK(cli({"info", (scratch() / "missing.json").string()}).rc == kExitIo);
  CHECK(cli({"frobnicate"}).rc == kExitInput);
  CHECK(cli({"simple", good, "--which", "nope"}).rc == kExitInput);
  CHECK(cli({"check"}).rc == kExitInput);

  const auto big = doc_file("z9.json", builtin_semigroup("group-cyclic", 9));
  CHECK(cli({"endos", big}).rc == kExitIo);
  CHECK(cli({"--force", "endos", big}).rc == kExitOk);

  const auto ex = doc_file("example.json", worked_example());
  CHECK(cli({"check", ex}).rc == kExitViolated);
  CHECK(cli({"check", good}).rc == kExitOk);
  const auto v2 = doc_file("v.json", builtin_semigroup("antichain-top", 2));
  CHECK(cli({"endos", "--zero-fixing", v2}).rc == kExitInput);
}

TEST_CASE("INVSR_FORCE=1 lifts the guards with a warning") {
  // Z_9 is over the enumeration guard but has only nine endomorphisms.
  const auto big = doc_file("z9.json", builtin_semigroup("group-cyclic", 9));
  ::setenv("INVSR_FORCE", "1", 1);
  const auto r = cli({"endos", big});
  ::unsetenv("INVSR_FORCE");
  CHECK(r.rc == kExitOk);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(cli({"endos", big}).rc == kExitIo);
}

TEST_CASE("reports are deterministic and timing is opt-in") {
  const auto ex = doc_file("example.json", worked_example());
  for (const char* fmt : {"text", "json"}) {
    const auto a = cli({"--format", fmt, "endos", ex});
    const auto b = cli({"--format", fmt, "endos", ex});
    CHECK(a.out == b.out);
    CHECK(a.out.find('\r') == std::string::npos);
    CHECK(a.out.find("time") == std::string::npos);
  }
  const auto t = cli({"--format", "json", "--timing", "info", ex});
  CHECK(json::parse(t.out).contains("timing_ms"));
  CHECK(cli({"--timing", "info", ex}).out.find("time: ") != std::string::npos);
}

TEST_CASE("json envelope") {
  const auto ex = doc_file("example.json", worked_example());
  const auto r = cli({"--format", "json", "endos", ex});
  REQUIRE(r.rc == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["tool"] == "invsr");
  CHECK(j["version"] == std::string(kToolVersion));
  CHECK(j["schema"] == kReportSchemaVersion);
  CHECK(j["command"] == "endos");
  CHECK(j["input"] == input_digest(emit_document(worked_example())));
  CHECK(j["result"]["count"] == 35);
  CHECK(j["result"]["maps"].size() == 35);
  CHECK(j["result"]["discrepancy"]["stated"] == 9);
  CHECK(j["result"]["discrepancy"]["unlisted"].size() == 26);
}

TEST_CASE("digest") {
  // FNV-1a 64 reference values
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(input_digest("a") == "fnv1a64:af63dc4c8601ec8c");
}

TEST_CASE("subcommand payloads") {
  const auto c2 = doc_file("chain2.json", builtin_semigroup("chain", 2));
  const auto simple = json::parse(cli({"--format", "json", "simple", c2, "--which", "endE"}).out);
  CHECK(simple["result"]["simple"] == true);
  CHECK(simple["result"]["partition_oracle"] == true);

  const auto v = doc_file("v.json", builtin_semigroup("antichain-top", 2));
  const auto ns = json::parse(cli({"--format", "json", "simple", v, "--which", "end"}).out);
  CHECK(ns["result"]["simple"] == false);

  const auto ex = doc_file("example.json", worked_example());
  const auto mono =
      json::parse(cli({"--format", "json", "monolith", ex, "--subset", "embedE"}).out);
  CHECK(mono["result"]["subdirectly_irreducible"] == true);
  CHECK(mono["result"]["matches_r"] == true);
  CHECK(mono["result"]["hypotheses_unmet"].empty());

  const auto tau = json::parse(cli({"--format", "json", "subsemiring", ex, "--gen", "tau"}).out);
  CHECK(tau["result"]["size"] == 16);
  CHECK(cli({"subsemiring", v, "--gen", "tau"}).rc == kExitInput);

  const auto info = json::parse(cli({"--format", "json", "info", ex}).out);
  CHECK(info["result"]["idempotents"] ==
        json::array({"(0,0)", "(0,1)", "(1,0)", "(1,1)"}));
  CHECK(info["result"]["identity"] == "(1,1)");
  CHECK(info["result"]["absorbing"] == "(0,0)");
}

TEST_CASE("corpus suite text lists theorems in catalogue order") {
  const auto r = cli({"check", "--paper-suite"});
  CHECK(r.rc == kExitViolated);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t last = 0;
  std::size_t seen = 0;
  while (std::getline(lines, line)) {
    for (std::size_t k = 0; k < theorem_catalogue().size(); ++k) {
      const auto id = std::string(theorem_catalogue()[k].id);
      if (line.find(" " + id + "  [") != std::string::npos) {
        CHECK(k >= last);
        last = k;
        ++seen;
        break;
      }
    }
  }
  CHECK(seen > 100);
  CHECK(r.out.find("erratum: example-endomorphism-count") != std::string::npos);
}

TEST_CASE("the installed binary maps exit codes the same way") {
  const std::string bin = INVSR_BINARY;
  const auto ex = doc_file("example.json", worked_example());
  const auto quiet = " >/dev/null 2>&1";
  auto status = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + quiet).c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status("info " + ex) == kExitOk);
  CHECK(status("check " + ex) == kExitViolated);
  CHECK(status("info /nonexistent/file.json") == kExitIo);
  CHECK(status("--format yaml info " + ex) == kExitInput);
}

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "json.hpp"
#include "morseaut/complex_io.hpp"
#include "morseaut/hasse.hpp"
#include "morseaut_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = morseaut::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

/// `first | second`.
Result pipe(std::vector<std::string> first, std::vector<std::string> second) {
  const Result a = run(std::move(first));
  REQUIRE(a.code == 0);
  return run(std::move(second), a.out);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("morseaut_cli_" + name);
}

}  // namespace

TEST_CASE("gen cycle 3 | verify -") {
  const Result r = pipe({"gen", "cycle", "3"}, {"verify", "-"});
  CHECK(r.code == 0);
  CHECK(r.out.find("orders (|Aut K|, |Aut M|) = (6, 12)") != std::string::npos);
  CHECK(r.out.find("overall: PASS") != std::string::npos);
}

TEST_CASE("gen boundary 3 | aut - --of hasse") {
  const Result r = pipe({"gen", "boundary", "3"}, {"aut", "-", "--of", "hasse"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("order: 48\n", 0) == 0);
}

TEST_CASE("gen path 3 | build-morse -") {
  const Result r = pipe({"gen", "path", "3"}, {"build-morse", "-"});
  CHECK(r.code == 0);
  CHECK(r.out.find("f-vector: (4, 3)") != std::string::npos);
}

TEST_CASE("gen emits facet text or JSON") {
  CHECK(run({"gen", "path", "3"}).out == "v0 v1\nv1 v2\n");
  const Result j = run({"gen", "cycle", "4", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)["f_vector"] == nlohmann::json({4, 4}));
  CHECK(run({"gen", "simplex", "2"}).out == "v0 v1 v2\n");
  CHECK(run({"gen", "torus", "3"}).code == 1);
  CHECK(run({"gen", "cycle", "2"}).code == 1);
  CHECK(run({"gen", "cycle", "3", "--format", "dot"}).code == 1);
}

TEST_CASE("aut of the Morse complex directly and via the Hasse diagram") {
  const std::string c4 = run({"gen", "cycle", "4"}).out;
  const Result direct = run({"aut", "-", "--of", "morse", "--format", "json"}, c4);
  const Result indirect = run({"aut", "-", "--of", "morse", "--via-hasse", "--format", "json"}, c4);
  REQUIRE(direct.code == 0);
  REQUIRE(indirect.code == 0);
  const auto a = nlohmann::json::parse(direct.out), b = nlohmann::json::parse(indirect.out);
  CHECK(a["order"] == 16);
  CHECK(b["order"] == 16);
  CHECK(a["degree"] == 8);
  CHECK(run({"aut", "-", "--of", "complex"}, c4).out.rfind("order: 8\n", 0) == 0);
  CHECK(run({"aut", "-", "--of", "nothing"}, c4).code == 1);
}

TEST_CASE("aut prints generators in image notation") {
  const Result r = run({"aut", "-"}, "a b\n");
  CHECK(r.out == "order: 2\ngenerators:\n  (1 0)\n");
  CHECK(run({"aut", "-"}, "a\n").out == "order: 1\ngenerators: none\n");
}

TEST_CASE("build-morse over budget exits 1 and writes partial JSON") {
  const std::string tet = run({"gen", "boundary", "3"}).out;
  const Result r = run({"build-morse", "-", "--budget", "10", "--format", "json"}, tet);
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["partial"] == true);
  CHECK(j["budget"] == 10);
  CHECK(j["gradient_fields_reached"] == 11);
  CHECK(r.err.find("budget") != std::string::npos);

  const auto path = temp_file("partial.json");
  const Result s = run({"build-morse", "-", "--budget", "10", "-o", path.string()}, tet);
  CHECK(s.code == 1);
  std::ifstream in(path);
  CHECK(nlohmann::json::parse(in)["partial"] == true);
  std::filesystem::remove(path);
}

TEST_CASE("build-morse writes the Morse complex as JSON") {
  const auto path = temp_file("morse.json");
  const Result r = run({"build-morse", "-", "-o", path.string()}, "a b\nb c\n");
  CHECK(r.code == 0);
  CHECK(r.out == "primitives: 4\nf-vector: (4, 3)\n");
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["partial"] == false);
  CHECK(j["f_vector"] == nlohmann::json({4, 3}));
  std::filesystem::remove(path);
}

TEST_CASE("input errors exit 1 with a message") {
  const Result bad = run({"verify", "-"}, "a b\nc c\n");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 2") != std::string::npos);
  const Result missing = run({"verify", "/nonexistent/file.txt"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("cannot read") != std::string::npos);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"verify", "-", "--budget", "0"}, "a b\n").code == 1);
  CHECK(run({"verify", "-"}, "a b\nc d\n").code == 1);
}

TEST_CASE("budget exhaustion in verify exits 1") {
  const Result r = run({"verify", "-", "--group-budget", "3"}, run({"gen", "cycle", "4"}).out);
  CHECK(r.code == 1);
  CHECK(r.out.find("incomplete") != std::string::npos);
}

TEST_CASE("verify JSON output") {
  const Result r = run({"verify", "-", "--format", "json", "--samples", "50"},
                       run({"gen", "boundary", "3"}).out);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["overall"] == true);
  CHECK(j["orders"]["aut_morse"] == 48);
  CHECK(j["classification"] == "BoundarySimplex(3)");
  CHECK(j["checks"][0].contains("elapsed_ms") == false);
  const Result t = run({"verify", "-", "--format", "json", "--timings"}, "a b\nb c\n");
  CHECK(nlohmann::json::parse(t.out)["checks"][0].contains("elapsed_ms"));
}

TEST_CASE("verify --via-hasse on the 4-sphere boundary") {
  const Result r = pipe({"gen", "boundary", "4"}, {"verify", "-", "--via-hasse"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(120, 240)") != std::string::npos);
}

TEST_CASE("export-json then re-ingest gives the same faces") {
  for (const auto& name : fixtures::generic_names()) {
    const Result r = run({"export-json", fixtures::path(name)});
    REQUIRE(r.code == 0);
    CHECK(morseaut::parse_complex(r.out).faces() == fixtures::load(name).faces());
  }
  const Result m = run({"export-json", "-", "--of", "morse"}, "a b\n");
  CHECK(morseaut::parse_complex(m.out).f_vector() == std::vector<std::size_t>{2});
}

TEST_CASE("export-dot renders the Hasse diagram") {
  const auto k = fixtures::load("kite");
  const Result r = run({"export-dot", fixtures::path("kite")});
  CHECK(r.code == 0);
  CHECK(r.out == morseaut::to_dot(morseaut::build_hasse(k), k));
  CHECK(run({"export-dot", fixtures::path("kite"), "--of", "morse"}).code == 1);
}

TEST_CASE("every command is deterministic") {
  const std::string mob = fixtures::path("mobius5");
  const std::vector<std::vector<std::string>> commands{
      {"gen", "boundary", "4"},
      {"build-morse", fixtures::path("kite"), "--format", "json"},
      {"aut", mob, "--of", "hasse"},
      {"aut", fixtures::path("star3"), "--of", "morse", "--format", "json"},
      {"verify", fixtures::path("kite"), "--format", "json"},
      {"verify", fixtures::path("c4")},
      {"export-dot", mob},
      {"export-json", mob}};
  for (const auto& c : commands) {
    const Result a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("output file option") {
  const auto path = temp_file("gen.txt");
  CHECK(run({"gen", "cycle", "3", "-o", path.string()}).out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == "v0 v1\nv0 v2\nv1 v2\n");
  std::filesystem::remove(path);
}

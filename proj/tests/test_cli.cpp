#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sds/cli.hpp"
#include "sds/ksds.hpp"
#include "sds/report.hpp"
#include "test_support.hpp"

using namespace sds;
using namespace sds::testing;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "sds");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check: PSD example") {
  const auto r = run_args({"check", "x1^2 - 2*x1*x2 + x2^2", "--matrix", "an", "--max-depth", "5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verdict: psd"));
  CHECK(contains(r.out, "depth: 1"));
}

TEST_CASE("check: NotPSD example") {
  const auto r = run_args({"check", "x1^2 - 3*x1*x2 + x2^2", "--matrix", "an"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "witness point: 2,1"));
  CHECK(contains(r.out, "witness value: -1"));
}

TEST_CASE("check: cyclic polynomial with the necessary condition") {
  const auto r = run_args({"check", kCyclic, "--matrix", "an", "--max-depth", "3", "--check-necessary"});
  CHECK(r.code == 2);
  CHECK(contains(r.out, "verdict: inconclusive"));
  CHECK(contains(r.out, "x1^3*x2*x3^2 is not majorized by any positive term in ordering x1 >= x3 >= x2"));

  const auto j = json::parse(
      run_args({"check", kCyclic, "--max-depth", "3", "--check-necessary", "--json"}).out);
  CHECK(j["verdict"] == "inconclusive");
  CHECK(j["necessary"]["holds"] == false);
  const json expected = {{"term", {3, 1, 2}}, {"ordering", {1, 3, 2}}};
  CHECK(std::find(j["necessary"]["violations"].begin(), j["necessary"]["violations"].end(),
                  expected) != j["necessary"]["violations"].end());
}

TEST_CASE("check: matrix choices and options") {
  CHECK(run_args({"check", "x1^2 - 2*x1*x2 + x2^2", "--matrix", "gn"}).code == 0);
  CHECK(run_args({"check", "x1^2 - 2*x1*x2 + x2^2", "--matrix", "q=2,1/3"}).code == 0);
  CHECK(run_args({"check", "x1^2 - 2*x1*x2 + x2^2", "--matrix", "q=1,2,3"}).code == 3);
  CHECK(run_args({"check", "x1^2 - 2*x1*x2 + x2^2", "--matrix", "q=1,0"}).code == 3);
  CHECK(run_args({"check", "x1^2 - 2*x1*x2 + x2^2", "--matrix", "bn"}).code == 3);
  CHECK(run_args({"check", "x1^2 - 2*x1*x2 + x2^2", "--no-dedup"}).code == 0);
  CHECK(run_args({"check", "x1^2 - 2*x1*x2 + x2^2", "--max-depth", "0"}).code == 2);

  const auto m = cli::parse_matrix_choice("q=1, 3/2");
  CHECK(m.kind == cli::MatrixChoice::Kind::Custom);
  CHECK(m.q == std::vector<Rational>{Rational(1), Rational(3, 2)});
}

TEST_CASE("check: input errors exit 3") {
  const auto r = run_args({"check", "x1 + x2^2"});
  CHECK(r.code == 3);
  CHECK(contains(r.err, "inhomogeneous"));
  CHECK(run_args({"check", "x1^2 +"}).code == 3);
  CHECK(run_args({"check"}).code == 3);
  CHECK(run_args({"check", "x1^2", "--max-depth", "-1"}).code == 3);
  CHECK(run_args({"frobnicate"}).code == 3);
  CHECK(run_args({}).code == 3);
  CHECK(run_args({"check", "--file", "/nonexistent/form.txt"}).code == 3);
  CHECK(run_args({"check", "x1*x9"}).code == 3);
  CHECK(run_args({"--help"}).code == 0);
}

TEST_CASE("check: --file and SDS_NODE_BUDGET") {
  const auto path = std::filesystem::temp_directory_path() / "sds_cli_test_form.txt";
  {
    std::ofstream(path) << "x1^2 - 3*x1*x2 + x2^2\n";
  }
  CHECK(run_args({"check", "--file", path.string()}).code == 1);
  std::filesystem::remove(path);

  ::setenv("SDS_NODE_BUDGET", "2", 1);
  auto j = json::parse(run_args({"check", kCyclic, "--json"}).out);
  CHECK(j["stats"]["budget_exhausted"] == true);
  CHECK(j["stats"]["nodes_expanded"].get<int>() <= 2);
  // an explicit flag wins over the environment
  j = json::parse(run_args({"check", kCyclic, "--json", "--max-depth", "2", "--node-budget", "100"}).out);
  CHECK(j["stats"]["budget_exhausted"] == false);
  ::setenv("SDS_NODE_BUDGET", "lots", 1);
  CHECK(run_args({"check", kCyclic}).code == 3);
  ::unsetenv("SDS_NODE_BUDGET");
}

TEST_CASE("necessary") {
  auto r = run_args({"necessary", kCyclic});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "x1^3*x2*x3^2"));
  CHECK(contains(r.out, "(1,3,2)"));

  r = run_args({"necessary", "x1^2 + x2^2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "holds"));

  r = run_args({"necessary", "x1^2 - x1*x2", "--json"});
  CHECK(r.code == 1);
  const auto j = json::parse(r.out);
  CHECK(j["version"] == "v1");
  CHECK(j["holds"] == false);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["term"] == json({1, 1}));
  CHECK(j["violations"][0]["ordering"] == json({2, 1}));

  CHECK(run_args({"necessary", "x1 +"}).code == 3);
}

TEST_CASE("majorize") {
  auto r = run_args({"majorize", "3,1,1", "2,1,2", "--sigma", "1,2,3"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");

  r = run_args({"majorize", "3,4,1", "4,2,2", "--sigma", "1,2,3"});
  CHECK(r.code == 1);
  CHECK(r.out == "false\nseparating point: 2,1,1\n");

  CHECK(run_args({"majorize", "3,4,1", "4,2,2", "--sigma", "2,1,3"}).code == 0);
  CHECK(run_args({"majorize", "3,4,1", "4,2,2"}).code == 1);

  const auto j = json::parse(run_args({"majorize", "3,4,1", "4,2,2", "--json"}).out);
  CHECK(j["majorizes"] == false);
  CHECK(j["separating_point"] == json({"2/1", "1/1", "1/1"}));

  CHECK(run_args({"majorize", "3,1,1", "2,1,1"}).code == 3);
  CHECK(run_args({"majorize", "3,1", "2,1,1"}).code == 3);
  CHECK(run_args({"majorize", "3,1,1", "2,1,2", "--sigma", "1,1,2"}).code == 3);
  CHECK(run_args({"majorize", "3,x,1", "2,1,2"}).code == 3);
}

TEST_CASE("JSON reports: exact rationals, schema, round trip") {
  const Form f = parse_form("25*x1^2 - 49*x1*x2 + 24*x2^2");
  const Verdict v = ksds_run(f, SubstitutionTemplate::gn(2), 8);
  REQUIRE(v.kind == VerdictKind::NotPSD);
  const json j = json::parse(to_json(v).dump());
  CHECK(j["version"] == "v1");
  CHECK(j["verdict"] == "not_psd");
  for (const auto& c : j["witness"]["point"]) CHECK(contains(c.get<std::string>(), "/"));
  CHECK(contains(j["witness"]["value"].get<std::string>(), "/"));
  const Witness back = witness_from_json(j["witness"]);
  CHECK(back.path == v.witness->path);
  CHECK(back.point == v.witness->point);
  CHECK(back.value == v.witness->value);
  CHECK(evaluate(f, back.point) == back.value);
  for (const char* key : {"nodes_expanded", "trivially_positive_pruned", "dedup_hits",
                          "max_frontier_size", "budget_exhausted"}) {
    CHECK(j["stats"].contains(key));
  }
}

TEST_CASE("text and JSON agree, exit codes follow the verdict kind") {
  for (const auto& text : corpus()) {
    CAPTURE(text);
    const auto plain = run_args({"check", text, "--max-depth", "3", "--check-necessary"});
    const auto js = run_args({"check", text, "--max-depth", "3", "--check-necessary", "--json"});
    CHECK(plain.code == js.code);
    const json j = json::parse(js.out);
    const std::string kind = j["verdict"];
    CHECK(contains(plain.out, "verdict: " + kind));
    CHECK(plain.code == (kind == "psd" ? 0 : kind == "not_psd" ? 1 : 2));
    CHECK(contains(plain.out, "depth: " + std::to_string(j["depth"].get<int>())));
    if (j.contains("witness")) {
      const Witness w = witness_from_json(j["witness"]);
      CHECK(contains(plain.out, "witness point: " + render(w.point) + "\n"));
      CHECK(contains(plain.out, "witness value: " + to_string(w.value) + "\n"));
      CHECK(evaluate(parse_form(text), w.point) == w.value);
    }
  }
}

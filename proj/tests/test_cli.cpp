#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "idealtop/error.hpp"
#include "idealtop/json.hpp"

using namespace idealtop;

namespace {

const std::string kData = IDEALTOP_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "idealtop");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("idealtop_test_" + name);
}

}  // namespace

TEST_CASE("point lists") {
  CHECK(cli::parse_point_list("{0,1}") == std::vector<int>{0, 1});
  CHECK(cli::parse_point_list("{}").empty());
  CHECK(cli::parse_point_list("[2, 0]") == std::vector<int>{0, 2});
  CHECK(cli::parse_point_list(" 3 ") == std::vector<int>{3});
  CHECK_THROWS_AS(cli::parse_point_list("{a}"), Error);
  CHECK_THROWS_AS(cli::parse_point_list("{-1}"), Error);
}

TEST_CASE("star command") {
  const Result local = run_cli({"star", kData + "/sierpinski_m1.json", "local", "{0}"});
  CHECK(local.code == cli::kOk);
  CHECK(has(local.out, "{0}"));
  CHECK(has(local.out, "labels: {closed}"));

  CHECK(has(run_cli({"star", kData + "/sierpinski_m1.json", "tau_star"}).out, "[[],[0],[1],[0,1]]"));
  CHECK(has(run_cli({"star", kData + "/sierpinski_m0.json", "psi", "{1}"}).out, "{1}"));
  CHECK(has(run_cli({"star", kData + "/sierpinski_m1.json", "compat"}).out, "true"));

  CHECK(run_cli({"star", kData + "/sierpinski_m1.json", "local"}).code == cli::kUsage);
  CHECK(run_cli({"star", kData + "/sierpinski_m1.json", "local", "{5}"}).code == cli::kUsage);
  CHECK(run_cli({"star", kData + "/sierpinski_m1.json", "frobnicate", "{0}"}).code == cli::kUsage);
  const Result bad = run_cli({"star", kData + "/bad_topology.json", "local", "{0}"});
  CHECK(bad.code == cli::kUsage);
  CHECK(has(bad.err, "error:"));
}

TEST_CASE("check command") {
  const Result all = run_cli({"check", kData + "/identity_sierpinski.json", "all"});
  CHECK(all.code == cli::kOk);
  CHECK(has(all.out, "HOMEO_COR"));

  const auto json_path = temp_file("verdicts.json");
  const Result closed =
      run_cli({"check", kData + "/closed_injection_dual.json", "CLOSEDSUR", "TC1", "--json", json_path.string()});
  CHECK(closed.code == cli::kRefuted);
  CHECK(has(closed.out, "REFUTED"));
  const Json verdicts = read_json_file(json_path.string());
  REQUIRE(verdicts.is_array());
  REQUIRE(verdicts.size() == 2);
  CHECK(verdicts[0]["theorem"] == "CLOSEDSUR");
  CHECK(verdicts[0]["conclusions"]["b"] == false);
  CHECK(verdicts[0]["witness"]["subset"] == Json::parse("[1]"));
  std::filesystem::remove(json_path);

  CHECK(run_cli({"check", kData + "/identity_sierpinski.json", "NOPE"}).code == cli::kUsage);
}

TEST_CASE("search command") {
  const Result tc1 = run_cli({"search", "TC1", "--max-n", "2", "--quiet"});
  CHECK(tc1.code == cli::kOk);
  CHECK(has(tc1.out, "instances checked: 1124"));
  CHECK(has(tc1.out, "result: certified"));
  CHECK(tc1.err.find("block") == std::string::npos);

  const auto json_path = temp_file("report.json");
  const Result drop =
      run_cli({"search", "CONTPSI", "--drop", "surjective", "--max-n", "2", "--json", json_path.string()});
  CHECK(drop.code == cli::kRefuted);
  CHECK(has(drop.err, "block"));
  const Json report = read_json_file(json_path.string());
  CHECK(report["mode"] == "exhaustive");
  CHECK(report["dropped_hypotheses"] == Json::parse(R"(["surjective"])"));
  CHECK_FALSE(report["counterexample"].is_null());
  CHECK_FALSE(report.contains("elapsed"));
  std::filesystem::remove(json_path);

  const Result restricted =
      run_cli({"search", "TC1", "--max-n", "2", "--dom-carriers", "[[]]", "--cod-carriers", "[[]]", "--quiet"});
  CHECK(restricted.code == cli::kOk);
  CHECK(has(restricted.out, "mode: restricted"));

  const Result sampled = run_cli({"search", "TC1", "--seed", "7", "--samples", "100", "--quiet"});
  CHECK(sampled.code == cli::kOk);
  CHECK(has(sampled.out, "mode: sampled"));

  CHECK(run_cli({"search", "TC1", "--max-n", "9"}).code == cli::kUsage);
  CHECK(run_cli({"search", "TC1", "--drop", "nonsense", "--max-n", "1"}).code == cli::kUsage);
  CHECK(run_cli({"search", "TC1", "--samples", "10"}).code == cli::kUsage);
  CHECK(run_cli({"search", "TC1", "--dom-carriers", "[[0", "--max-n", "1"}).code == cli::kUsage);
  CHECK(run_cli({"search"}).code == cli::kUsage);
}

TEST_CASE("demo command") {
  for (const char* name : {"add-open-point", "add-generic-point", "collapse-cont", "pstar-trivial"}) {
    INFO(name);
    const Result r = run_cli({"demo", name});
    CHECK(r.code == cli::kOk);
    CHECK(has(r.out, "prediction confirmed"));
  }
  CHECK(run_cli({"demo", "nope"}).code == cli::kUsage);
}

TEST_CASE("enumerate command") {
  CHECK(run_cli({"enumerate", "--what", "topologies", "--n", "4", "--count-only"}).out == "355\n");
  CHECK(run_cli({"enumerate", "--what", "ideals", "--n", "3", "--count-only"}).out == "8\n");
  CHECK(run_cli({"enumerate", "--what", "maps", "--n", "2", "--m", "3", "--count-only"}).out == "9\n");
  const Result listed = run_cli({"enumerate", "--what", "topologies", "--n", "2"});
  CHECK(listed.code == cli::kOk);
  CHECK(has(listed.out, R"({"n":2,"opens":[[],[0],[1],[0,1]]})"));
  CHECK(run_cli({"enumerate", "--what", "topologies", "--n", "6", "--count-only"}).code == cli::kUsage);
  CHECK(run_cli({"enumerate", "--what", "cats", "--n", "2"}).code == cli::kUsage);
}

TEST_CASE("help exits cleanly") { CHECK(run_cli({"--help"}).code == cli::kOk); }

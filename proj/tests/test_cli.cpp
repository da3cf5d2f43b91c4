#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fht/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = fht::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  const Run unknown = invoke({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("verify-all") != std::string::npos);
  CHECK(invoke({"variation", "--set", "0,1,2"}).code == 2);
  CHECK(invoke({"variation", "--set", "abc"}).code == 2);
  CHECK(invoke({"variation", "--nodes", "4"}).code == 2);
  CHECK(invoke({"variation", "--clearance", "0.5"}).code == 2);
  CHECK(invoke({"variation", "--set", "-0.5,0.5"}).code == 2);
  CHECK(invoke({"laeng", "--format", "xml"}).code == 2);
  CHECK(invoke({"envelope", "--levels", "13"}).code == 2);
  CHECK(invoke({"variation", "--out", "/nonexistent-dir/x.json"}).code == 2);
}

TEST_CASE("variation example") {
  const Run r = invoke({"variation", "--set", "0,1", "--n", "4,16,64,256"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["subcommand"] == "variation");
  CHECK(doc["pass"] == true);
  CHECK(doc.contains("timestamp"));
  CHECK(doc["version"] == fht::cli::kVersion);
  CHECK(doc["config"]["nodes"] == 2048);
  CHECK(doc["config"]["sets"][0] == "0,1");
  REQUIRE(doc["results"]["reports"].size() == 4);
  for (const json& rep : doc["results"]["reports"]) CHECK(rep["margin"].get<double>() >= 0.0);
  CHECK(r.err.rfind("PASS", 0) == 0);
}

TEST_CASE("laeng at p = 2 fails the stated constant and matches the interval one") {
  const Run r = invoke({"laeng", "--set", "-0.3,0.4", "--p", "2"});
  CHECK(r.code == 1);
  const json doc = json::parse(r.out);
  CHECK(doc["pass"] == false);
  const json& rep = doc["results"]["reports"][0];
  CHECK(rep["rel_err_interval"].get<double>() < 1e-3);
  CHECK(rep["lhs"].get<double>() == doctest::Approx(0.7 / 3.0).epsilon(1e-8));
  CHECK(r.err.rfind("FAIL", 0) == 0);
}

TEST_CASE("output is deterministic apart from the timestamp") {
  const std::vector<std::string> args{"envelope", "--levels", "4", "--seed", "99"};
  json a = json::parse(invoke(args).out);
  json b = json::parse(invoke(args).out);
  a.erase("timestamp");
  b.erase("timestamp");
  CHECK(a == b);
  CHECK(a["results"]["seed"] == 99);
}

TEST_CASE("csv output and --out") {
  const Run csv = invoke({"variation", "--n", "4", "--format", "csv"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "n,k,cell_norm,total,lower_bound,margin");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.empty()) continue;
    ++rows;
    CHECK(line.rfind("4,", 0) == 0);
    CHECK(line.find(' ') == std::string::npos);
  }
  CHECK(rows == 4);

  const std::filesystem::path path = std::filesystem::temp_directory_path() / "fht_cli_test.json";
  std::filesystem::remove(path);
  const Run file = invoke({"lexp", "--set", "0,1", "--out", path.string()});
  CHECK(file.code == 0);
  CHECK(file.out.empty());
  std::ifstream in(path);
  const json doc = json::parse(in);
  CHECK(doc["subcommand"] == "lexp");
  CHECK(doc["results"]["reports"][0]["lexp_norm"].get<double>() > doc["results"]["reports"][0]["floor"].get<double>());
  std::filesystem::remove(path);
}

TEST_CASE("other subcommands run") {
  CHECK(invoke({"transform", "--f", "x"}).code == 0);
  CHECK(invoke({"norms", "--set", "0,0.5", "--f", "indicator"}).code == 0);
  CHECK(invoke({"parseval", "--f", "x^2", "--g", "chi:0,0.5"}).code == 0);
  CHECK(invoke({"inversion", "--set", "-0.3,0.4", "--nodes", "4096"}).code == 0);
  CHECK(invoke({"probe", "--f", "arcsine"}).code == 0);
  CHECK(invoke({"probe", "--f", "pole"}).code == 1);
  const Run v = invoke({"verify-all", "--only", "1,2"});
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["results"]["criteria"].size() == 2);
}

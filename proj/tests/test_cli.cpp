// End-to-end checks against the installed CLI surface: output bytes, JSON
// round trips, and the exit-code contract.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "borderidx/decomposition.hpp"
#include "borderidx/json_io.hpp"
#include "test_util.hpp"

using namespace borderidx;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(BORDERIDX_TOOL) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer;
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), output};
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  const auto path =
      std::filesystem::temp_directory_path() / ("borderidx_cli_" + name);
  std::ofstream out(path);
  out << content;
  return path;
}

const std::string kIdeal311 = R"({"dim": 2, "generators": [[2,0],[0,2]]})";

const std::string kMatrix311 =
    " 5  6  7  8  9 10 11 12\n"
    " 4  5  6  7  8  9 10 11\n"
    " 3  4  5  6  7  8  9 10\n"
    " 2  3  4  5  6  7  8  9\n"
    " 1  2  3  4  5  6  7  8\n"
    " 0  1  2  3  4  5  6  7\n"
    " 0  1  1  2  3  4  5  6\n"
    " 0  0  0  1  2  3  4  5\n";

}  // namespace

TEST_CASE("index matrix matches the published table byte for byte") {
  const auto ideal = write_temp("ideal311.json", kIdeal311);
  const auto result =
      run("index --input " + ideal.string() + " --bounds 7,7");
  CHECK(result.exit_code == 0);
  CHECK(result.output == kMatrix311);

  // The partition shorthand denotes the same staircase.
  const auto part = write_temp("part311.json", R"({"partition": [3,1,1]})");
  const auto shorthand =
      run("index --input " + part.string() + " --bounds 7,7");
  CHECK(shorthand.output == kMatrix311);

  const auto origin = run("index --input " + ideal.string() +
                          " --bounds 0,0");
  CHECK(origin.output == "0\n");
}

TEST_CASE("index json round trips") {
  const auto ideal = write_temp("ideal311b.json", kIdeal311);
  const auto result = run("index --input " + ideal.string() +
                          " --bounds 4,4 --format json");
  CHECK(result.exit_code == 0);
  const auto table = index_table_from_json(result.output);
  CHECK(table.at(ExponentVector{1, 1}) == 1);
  CHECK(table.at(ExponentVector{4, 4}) == 6);
}

TEST_CASE("border output") {
  const auto ideal = write_temp("ideal311c.json", kIdeal311);
  const auto text =
      run("border --input " + ideal.string() + " --format text");
  CHECK(text.output == "1 1\n3 0\n2 1\n1 2\n0 3\n");

  const auto second =
      run("border --input " + ideal.string() + " --k 2 --format json");
  const auto doc = nlohmann::json::parse(second.output);
  CHECK(doc["k"] == 2);
  CHECK(doc["elements"].size() == 5);
}

TEST_CASE("gf json round trips and verifies") {
  const auto ideal = write_temp("ideal311d.json", kIdeal311);
  const auto result = run("gf --input " + ideal.string() +
                          " --verify-bounds 7,7");
  CHECK(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["verify"]["ok"] == true);
  const auto gf = gf_from_json(doc["gf"].dump());
  CHECK(gf.equals(ind_gf(borderidx::testing::staircase_311()).gf));

  const auto via_2d = run("gf --input " + ideal.string() +
                          " --method 2d --verify-bounds 7,7");
  CHECK(via_2d.exit_code == 0);
  const auto doc2d = nlohmann::json::parse(via_2d.output);
  CHECK(gf_from_json(doc2d["gf"].dump()).equals(gf));
}

TEST_CASE("gf latex for a one-variable ideal") {
  const auto line = write_temp("line.json", R"({"dim":1,"elements":[[0]]})");
  const auto result =
      run("gf --input " + line.string() + " --format latex");
  CHECK(result.output == "\\frac{y_1}{(1-y_1)^{2}}\n");
}

TEST_CASE("pn command") {
  const auto latex = run("pn --a 1,1 --b 1 --format latex");
  CHECK(latex.output == "\\frac{1 - y_1y_2}{(1-y_1)^{2}(1-y_2)^{2}}\n");

  const auto checked = run("pn --a 2,-1/3 --b 5/7 --check-bounds 4,4");
  CHECK(checked.exit_code == 0);
  const auto doc = nlohmann::json::parse(checked.output);
  CHECK(doc["check"]["closed_matches_series"] == true);

  const auto constant = run("pn --b 3 --check");
  CHECK(constant.exit_code == 0);
}

TEST_CASE("decompose round trips") {
  const auto ideal = write_temp("ideal311e.json", kIdeal311);
  const auto result = run("decompose --input " + ideal.string());
  CHECK(result.exit_code == 0);
  const auto d = decomposition_from_json(result.output, 2);
  CHECK(d.cones.size() == 11);
  CHECK(validate_partition(d, borderidx::testing::staircase_311()).ok);
}

TEST_CASE("exit code contract") {
  const auto ideal = write_temp("ideal311f.json", kIdeal311);

  const auto bad_json = write_temp("bad.json", "{broken");
  CHECK(run("index --input " + bad_json.string() + " --bounds 2,2")
            .exit_code == 2);

  const auto bad_flag = run("index --input " + ideal.string());
  CHECK(bad_flag.exit_code == 2);  // --bounds is required

  const auto not_closed =
      write_temp("notclosed.json", R"({"dim":2,"elements":[[1,0]]})");
  CHECK(run("index --input " + not_closed.string() + " --bounds 2,2")
            .exit_code == 3);

  const auto empty = write_temp("empty.json",
                                R"({"dim":2,"generators":[]})");
  CHECK(run("gf --input " + empty.string()).exit_code == 3);

  const auto inadmissible = write_temp("inadm.json", R"({"cones": [
    {"anchor": [0,3], "free": [1,2]},
    {"anchor": [1,2], "free": [1]},
    {"anchor": [1,1], "free": [1]},
    {"anchor": [3,0], "free": [1]}
  ]})");
  const auto check = run("decompose --input " + ideal.string() +
                         " --check " + inadmissible.string());
  CHECK(check.exit_code == 4);
  const auto doc = nlohmann::json::parse(check.output);
  CHECK(doc["admissibility"] == "falsified");
  CHECK(doc["witness_beta"] == nlohmann::json::array({1, 0}));
}

TEST_CASE("run reports are deterministic up to timing") {
  const auto ideal = write_temp("ideal311g.json", kIdeal311);
  const auto report =
      std::filesystem::temp_directory_path() / "borderidx_report.json";
  run("--report " + report.string() + " gf --input " + ideal.string() +
      " --verify-bounds 5,5");
  auto a = nlohmann::json::parse(read_file(report.string()));
  run("--report " + report.string() + " gf --input " + ideal.string() +
      " --verify-bounds 5,5");
  auto b = nlohmann::json::parse(read_file(report.string()));
  CHECK(a["input_digest"] == b["input_digest"]);
  CHECK(a["input_digest"].get<std::string>().size() == 16);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a == b);
}

TEST_CASE("verify command seeds reproducibly") {
  const auto a = run("verify --count 3 --seed 99 --format json");
  const auto b = run("verify --count 3 --seed 99 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  const auto doc = nlohmann::json::parse(a.output);
  CHECK(doc["ok"] == true);
  CHECK(doc["results"].size() == 3);
}

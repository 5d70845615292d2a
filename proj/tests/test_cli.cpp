#include <doctest.h>

#include <json.hpp>

#include "affweyl/weyl.hpp"
#include "cli_support.hpp"
#include "helpers.hpp"

using namespace affweyl;
using namespace affweyl::testing;

TEST_CASE("golden outputs") {
  for (const auto& g : golden_cases()) {
    CAPTURE(g.file);
    auto first = run_cli(g.args);
    auto second = run_cli(g.args);
    CHECK(first.code == 0);
    CHECK(first.out == read_file(std::string(AFFWEYL_GOLDEN_DIR) + "/" + g.file));
    CHECK(first.out == second.out);
  }
}

TEST_CASE("unitary json fields") {
  auto r = run_cli({"unitary", "2", "2", "--output", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dim"] == 6);
  CHECK(j["w_p2_length"] == 3);
  CHECK(j["strata_count"] == 3);
  CHECK(j["Q_p"] == nlohmann::json({1}));
}

TEST_CASE("strata dot has three nodes and two edges") {
  auto r = run_cli(golden_cases()[2].args);
  int nodes = 0, edges = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    if (line.find("->") != std::string::npos) ++edges;
    else if (line.find("[label=") != std::string::npos) ++nodes;
  }
  CHECK(nodes == 3);
  CHECK(edges == 2);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"dim", "--element", "bogus"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"dim", "-e", "id", "--left", "0,1,2"}).code == 2);
  CHECK(run_cli({"length", "--type", "G", "--rank", "2", "-e", "id"}).code == 2);
  CHECK(run_cli({"unitary", "3", "5"}).code == 2);
  CHECK(run_cli({"length", "-e", "id", "--output", "dot"}).code == 2);
  CHECK(run_cli({"resolve", "-e", "id", "--right", "1,2", "--output", "yaml"}).code == 2);
  CHECK(run_cli({"enumerate", "-L", "1000"}).code == 2);
  auto bad = run_cli({"length", "-e", "t:1|id"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(bad.out.empty());
}

TEST_CASE("verify passes on the command suite") {
  for (const auto& cmd : verify_suite()) {
    auto r = run_cli(cmd);
    std::string joined;
    for (const auto& a : cmd) joined += a + " ";
    CAPTURE(joined);
    CAPTURE(r.err);
    CHECK(r.code == 0);
    CHECK(r.err.find("verify: ok") != std::string::npos);
  }
}

TEST_CASE("printed elements reparse") {
  auto g = group('C', 2);
  for (const char* e : {"t:1,0|id", "t:-1,-1|id", "w:2,1,0,1", "id", "t:0,-1|w:1,2"}) {
    auto r = run_cli({"word", "-e", e});
    REQUIRE(r.code == 0);
    std::string printed = r.out.substr(0, r.out.find('\n'));
    CHECK(parse_element(g, printed) == parse_element(g, e));
  }
  auto m = run_cli({"mult", "-e", "w:0,1", "--other", "w:2,1,0"});
  REQUIRE(m.code == 0);
  CHECK(parse_element(g, m.out.substr(0, m.out.find('\n'))) == g.from_word({0, 1, 2, 1, 0}));
}

TEST_CASE("resolve normalizes non-minimal input") {
  auto r = run_cli({"resolve", "-e", "t:1,0|id", "--right", "1,2", "--output", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["normalized"] == true);
  CHECK(j["summary"]["total_length"] == 1);
  CHECK_FALSE(r.err.empty());
}

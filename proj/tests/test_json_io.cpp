#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "borderidx/json_io.hpp"
#include "borderidx/random_gen.hpp"
#include "test_util.hpp"

using namespace borderidx;
using borderidx::testing::staircase_311;

TEST_CASE("order ideal input forms") {
  const auto by_gens =
      order_ideal_from_json(R"({"dim": 2, "generators": [[2,0],[0,2]]})");
  CHECK(by_gens.size() == 5);

  const auto by_elements = order_ideal_from_json(
      R"({"dim": 2, "elements": [[0,0],[1,0],[2,0],[0,1],[0,2]]})");
  CHECK(by_elements.size() == 5);

  const auto by_partition = order_ideal_from_json(R"({"partition": [3,1,1]})");
  CHECK(by_partition.size() == 5);
  const auto expected = staircase_311();
  for (const auto& e : expected.elements()) {
    CHECK(by_gens.contains(e));
    CHECK(by_elements.contains(e));
    CHECK(by_partition.contains(e));
  }
}

TEST_CASE("order ideal input errors") {
  CHECK_THROWS_AS(order_ideal_from_json("not json"), ParseError);
  CHECK_THROWS_AS(order_ideal_from_json(R"({"dim": 2})"), ParseError);
  CHECK_THROWS_AS(
      order_ideal_from_json(R"({"dim": 2, "generators": [], "elements": []})"),
      ParseError);
  CHECK_THROWS_AS(
      order_ideal_from_json(R"({"dim": 2, "typo": [[0,0]]})"), ParseError);
  CHECK_THROWS_AS(
      order_ideal_from_json(R"({"dim": 2, "generators": [[1,-1]]})"),
      ParseError);
  CHECK_THROWS_AS(
      order_ideal_from_json(R"({"dim": 2, "generators": [[1,2,3]]})"),
      ParseError);
  CHECK_THROWS_AS(order_ideal_from_json(R"({"dim": 3, "partition": [2,1]})"),
                  ParseError);
  // Schema fine, semantics wrong: closure violation and bad partitions.
  CHECK_THROWS_AS(order_ideal_from_json(R"({"dim": 2, "elements": [[1,0]]})"),
                  InvalidIdealError);
  CHECK_THROWS_AS(order_ideal_from_json(R"({"partition": [1,2]})"),
                  InvalidIdealError);
}

TEST_CASE("decomposition wire format") {
  const std::string text = R"({"cones": [
    {"anchor": [0,3], "free": [1,2]},
    {"anchor": [1,1], "free": []}
  ]})";
  const auto d = decomposition_from_json(text, 2);
  REQUIRE(d.cones.size() == 2);
  CHECK(d.cones[0].anchor == ExponentVector{0, 3});
  CHECK(d.cones[0].free == std::vector<std::size_t>{0, 1});
  CHECK(d.cones[1].free.empty());

  const auto round = decomposition_from_json(decomposition_to_json(d), 2);
  REQUIRE(round.cones.size() == 2);
  CHECK(round.cones[0].anchor == d.cones[0].anchor);
  CHECK(round.cones[0].free == d.cones[0].free);

  CHECK_THROWS_AS(decomposition_from_json(R"({"cones": [
    {"anchor": [0,3], "free": [0]}
  ]})", 2), ParseError);  // free directions are 1-based
  CHECK_THROWS_AS(decomposition_from_json(R"({"cones": [
    {"anchor": [0,3,1], "free": [1]}
  ]})", 2), ParseError);
}

TEST_CASE("index table wire format") {
  const auto table = index_table(staircase_311(), ExponentVector{3, 3});
  const auto round = index_table_from_json(index_table_to_json(table));
  CHECK(round.bounds() == table.bounds());
  CHECK(round.values() == table.values());
}

TEST_CASE("generating function wire format errors") {
  CHECK_THROWS_AS(gf_from_json(R"({"num": [], "den": [2], "x": 1})"),
                  ParseError);
  CHECK_THROWS_AS(gf_from_json(R"({"num": [[1, 1]], "den": [2]})"),
                  ParseError);  // coefficient must be a string
  CHECK_THROWS_AS(gf_from_json(R"({"num": [[1, "1/0"]], "den": [2]})"),
                  ParseError);
  const auto zero = gf_from_json(R"({"num": [], "den": [0, 0]})");
  CHECK(zero.numerator().is_zero());
  CHECK(zero.dim() == 2);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "poishom/case_spec.hpp"
#include "poishom/group_action.hpp"

using namespace poishom;

TEST_CASE("family dispatch and naming") {
  CHECK(make_case("Cyclic", 3).name == "Cyclic{3}");
  CHECK(make_case("A2").name == "A2");
  CHECK(make_case("Pm1", 2).name == "Pm1{2}");
  CHECK(make_case("Z3", 2).name == "Z3{2}");
  CHECK_THROWS_AS(make_case("D4"), std::invalid_argument);
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(make_cyclic(1), std::invalid_argument);
  CHECK_THROWS_AS(make_z3(1), std::invalid_argument);
  CHECK_THROWS_AS(make_pm1(0), std::invalid_argument);
}

TEST_CASE("scan policies scale with the case size") {
  CHECK(make_cyclic(3).scan_bound == 12);
  CHECK(make_pm1(2).scan_bound == 8);
  CHECK(make_z3(3).scan_bound == 12);
  CaseSpec big = make_z3(4);
  CHECK(big.scan_bound == 14);
  CHECK_FALSE(big.brute_allowed);
  CHECK(big.mode == Mode::paper);
  CHECK(make_z3(3).brute_allowed);
}

TEST_CASE("subgroup orders of the preset families") {
  CHECK(group_order(make_z3(2).action) == 3);
  CHECK(group_order(make_z3(3).action) == 9);
  CHECK(group_order(make_z3(4).action) == 27);
  CHECK(group_order(make_pm1(3).action) == 8);
}

TEST_CASE("an even sign subgroup has no free classes") {
  CaseSpec spec = make_pm1(3, {{1, 1, 0}, {0, 1, 1}});
  CHECK(group_order(spec.action) == 4);
  CHECK(fixed_point_free_class_count(spec.action) == 0);
}

TEST_CASE("generators are normalized modulo the subgroup exponent") {
  CaseSpec spec = make_pm1(2, {{3, 0}, {-1, 0}, {0, 0}});
  CHECK(group_order(spec.action) == 2);
  CHECK_THROWS_AS(make_pm1(2, {{1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("diagonal custom cases mirror the presets") {
  std::string text = R"({"flavor": "diagonal", "pairs": 2, "modulus": 3,
                         "generators": [[1, 1]], "bound": 10,
                         "name": "ScalarCube"})";
  CaseSpec spec = make_custom_json(text, "inline");
  CHECK(spec.name == "ScalarCube");
  CHECK(spec.scan_bound == 10);
  CHECK(group_order(spec.action) == 3);
  CHECK(spec.invariant_dim(2) == make_cyclic(3).invariant_dim(2));

  std::string unnamed = R"({"flavor": "diagonal", "pairs": 1, "modulus": 2,
                            "generators": [[1]]})";
  CHECK(make_custom_json(unnamed, "inline").name == "Custom{inline}");
}

TEST_CASE("matrix custom cases accept rational structure overrides") {
  std::string text = R"({"flavor": "matrix", "pairs": 1,
                         "generators": [[[-1, 0], [0, -1]]],
                         "structure": [[0, "1/2"], ["-1/2", 0]]})";
  CaseSpec spec = make_custom_json(text, "inline");
  CHECK(group_order(spec.action) == 2);
  Poly x1 = Poly::variable(spec.vars, 0), y1 = Poly::variable(spec.vars, 1);
  Rat half(1);
  half /= 2;
  CHECK(bracket(spec.structure, x1, y1) == Poly::constant(spec.vars, half));
}

TEST_CASE("custom case rejections") {
  CHECK_THROWS_AS(make_custom_json("not json", "x"), std::invalid_argument);
  CHECK_THROWS_AS(make_custom_json("[1, 2]", "x"), std::invalid_argument);
  CHECK_THROWS_AS(
      make_custom_json(R"({"pairs": 1, "generators": []})", "x"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      make_custom_json(
          R"({"flavor": "diagonal", "pairs": 1, "generators": [[1]]})", "x"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      make_custom_json(
          R"({"flavor": "matrix", "pairs": 1, "generators": [[[1, 0]]]})",
          "x"),
      std::invalid_argument);
  // A non-symplectic generator is caught before any scan could run.
  CHECK_THROWS_AS(
      make_custom_json(
          R"({"flavor": "matrix", "pairs": 1,
              "generators": [[[2, 0], [0, 1]]]})",
          "x"),
      std::invalid_argument);
}

TEST_CASE("custom cases load from files") {
  std::string path = "cases_test_tmp.json";
  {
    std::ofstream out(path);
    out << R"({"flavor": "diagonal", "pairs": 1, "modulus": 4,
               "generators": [[1]], "name": "FromFile"})";
  }
  CaseSpec spec = make_custom_file(path);
  CHECK(spec.name == "FromFile");
  CHECK(group_order(spec.action) == 4);
  std::remove(path.c_str());
  CHECK_THROWS_AS(make_custom_file("cases_test_missing.json"),
                  std::invalid_argument);
}

TEST_CASE("cached character tables regrow on demand") {
  CaseSpec spec = make_b2();
  CHECK(spec.invariant_dim(2) == 3);
  CHECK(spec.char_table(4).at(1, 1) == 1);
  CHECK(spec.char_table(8).at(4, 4) > 0);
  CHECK(spec.char_table(8).bound >= 8);
}

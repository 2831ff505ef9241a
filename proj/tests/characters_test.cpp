#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "poishom/case_spec.hpp"
#include "poishom/characters.hpp"

using namespace poishom;

namespace {
std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string chi_lines(const std::string& family, int bound) {
  CaseSpec spec = make_case(family);
  BiDimTable table = bidim_table(spec.action, bound);
  std::ostringstream out;
  for (int n = 0; n <= bound; ++n)
    out << "chi_" << n << " = " << sl2_character(table, n).str() << "\n";
  return out.str();
}

std::string pairing_lines(const std::string& family, int bound,
                          std::initializer_list<int> ks) {
  CaseSpec spec = make_case(family);
  BiDimTable table = bidim_table(spec.action, bound);
  std::ostringstream out;
  out << family << ":\n";
  for (int k : ks) {
    LaurentQ p = pairing_character(table, k);
    out << "pairing k=" << k << ": " << p.str() << "\n";
    out << "  trivial multiplicity: " << trivial_multiplicity(p) << ", "
        << (obstruction_holds(table, k) ? "obstruction holds"
                                        : "no obstruction")
        << "\n";
  }
  return out.str();
}
}  // namespace

TEST_CASE("laurent polynomials render with descending exponents") {
  LaurentQ p;
  p.add(2, 1);
  p.add(0, 1);
  p.add(-2, 1);
  CHECK(p.str() == "q^2 + 1 + q^-2");
  CHECK(p.symmetric());
  CHECK(p.dimension() == 3);
  CHECK(p.at(2) == 1);
  CHECK(p.at(4) == 0);
  CHECK(LaurentQ().str() == "0");
  LaurentQ q;
  q.add(1, 2);
  q.add(-1, 2);
  CHECK(q.str() == "2q + 2q^-1");
  CHECK((p * q).dimension() == 12);
  CHECK((p + q).at(1) == 2);
  LaurentQ lop = LaurentQ::term(3, 1) + LaurentQ::term(-1, 1);
  CHECK_FALSE(lop.symmetric());
}

TEST_CASE("trivial group table counts all monomials") {
  auto vars = VarSet::standard(2);
  DiagonalAction trivial(vars, 1, {});
  BiDimTable table = bidim_table(trivial, 6);
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; i + j <= 6; ++j) CHECK(table.at(i, j) == (i + 1) * (j + 1));
  CHECK(table.degree_dim(2) == 10);
  CHECK_THROWS_AS(table.at(4, 3), std::invalid_argument);
}

TEST_CASE("character of the signed pair group") {
  CaseSpec spec = make_b2();
  BiDimTable table = bidim_table(spec.action, 6);
  CHECK(table.at(1, 1) == 1);
  CHECK(table.at(2, 0) == 1);
  CHECK(table.at(1, 0) == 0);
  CHECK(sl2_character(table, 2).str() == "q^2 + 1 + q^-2");
  CHECK(sl2_character(table, 3).str() == "0");
  CHECK(sl2_character(table, 4).str() == "2q^4 + 2q^2 + 3 + 2q^-2 + 2q^-4");
  CHECK_THROWS_AS(sl2_character(table, 7), std::invalid_argument);
  for (int n = 0; n <= 6; ++n) CHECK(sl2_character(table, n).symmetric());
}

TEST_CASE("trivial multiplicity reads the top two even weights") {
  LaurentQ chi = LaurentQ::term(0, 1);
  CHECK(trivial_multiplicity(chi) == 1);
  // x^2, xy, y^2 form one irreducible of highest weight 2.
  auto vars = VarSet::standard(1);
  DiagonalAction trivial(vars, 1, {});
  BiDimTable table = bidim_table(trivial, 4);
  CHECK(trivial_multiplicity(sl2_character(table, 2)) == 0);
  LaurentQ bad = LaurentQ::term(2, 1);
  CHECK_THROWS_AS(trivial_multiplicity(bad), std::invalid_argument);
}

TEST_CASE("pairing characters against the stored transcripts") {
  CHECK(pairing_lines("B2", 14, {0, 2}) + pairing_lines("G2", 12, {2, 4}) ==
        slurp("obstructions.txt"));
}

TEST_CASE("pairing needs table headroom") {
  CaseSpec spec = make_b2();
  BiDimTable table = bidim_table(spec.action, 4);
  CHECK_NOTHROW(pairing_character(table, 1));
  CHECK_THROWS_AS(pairing_character(table, 2), std::invalid_argument);
}

TEST_CASE("no obstruction for the full polynomial ring") {
  auto vars = VarSet::standard(1);
  DiagonalAction trivial(vars, 1, {});
  BiDimTable table = bidim_table(trivial, 4);
  // chi_2 + chi_1^2 = 2q^2 + 3 + 2q^-2: trivial multiplicity 1.
  CHECK(trivial_multiplicity(pairing_character(table, 0)) == 1);
  CHECK_FALSE(obstruction_holds(table, 0));
}

TEST_CASE("character transcripts are stable") {
  CHECK(chi_lines("A2", 10) == slurp("characters_a2.txt"));
  CHECK(chi_lines("B2", 14) == slurp("characters_b2.txt"));
  CHECK(chi_lines("G2", 12) == slurp("characters_g2.txt"));
}

TEST_CASE("rational expansion reproduces monomial counts") {
  Series2 one = Series2::one();
  Series2 u = Series2::term(1, 0, Rat(1));
  Series2 v = Series2::term(0, 1, Rat(1));
  Series2 denom = (one - u) * (one - u) * (one - v) * (one - v);
  BiDimTable table = expand_rational(one, denom, 6);
  auto vars = VarSet::standard(2);
  DiagonalAction trivial(vars, 1, {});
  BiDimTable counted = bidim_table(trivial, 6);
  CHECK(table.dims == counted.dims);
  CHECK_THROWS_AS(expand_rational(one, u, 3), std::invalid_argument);
  CHECK_THROWS_AS(expand_rational(one, one + u, 3), std::invalid_argument);
}

TEST_CASE("character series expansion matches counted characters") {
  Series2 one = Series2::one();
  Series2 denom = one - Series2::term(1, 1, Rat(1)) -
                  Series2::term(1, -1, Rat(1)) + Series2::term(2, 0, Rat(1));
  std::vector<LaurentQ> chis = expand_char_series(one, denom, 5);
  auto vars = VarSet::standard(1);
  DiagonalAction trivial(vars, 1, {});
  BiDimTable table = bidim_table(trivial, 5);
  REQUIRE(chis.size() == 6);
  for (int n = 0; n <= 5; ++n) CHECK(chis[n] == sl2_character(table, n));
}

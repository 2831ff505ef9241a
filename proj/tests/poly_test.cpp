#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "poishom/poly.hpp"
#include "poishom/rat.hpp"

using namespace poishom;

namespace {
Poly var(const VarSetPtr& v, const std::string& name) {
  return Poly::variable(v, v->index_of(name));
}
}  // namespace

TEST_CASE("rationals canonicalize and render") {
  CHECK(rat_of(2, 4) == rat_of(1, 2));
  CHECK(rat_of(2, -4) == rat_of(-1, 2));
  CHECK(rat_str(rat_of(-1, 2)) == "-1/2");
  CHECK(rat_str(rat_of(3)) == "3");
  CHECK(rat_parse("7/3") == rat_of(7, 3));
  CHECK(rat_parse("-5") == rat_of(-5));
  CHECK(rat_parse("+2/6") == rat_of(1, 3));
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
}

TEST_CASE("rank of sparse rational matrices") {
  CHECK(rank(RatMatrix(3, 5)) == 0);
  RatMatrix m = RatMatrix::from_rows(
      {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}, {Rat(0), Rat(1)}});
  CHECK(rank(m) == 2);
  CHECK(rank(RatMatrix::identity(4)) == 4);
}

TEST_CASE("span membership") {
  std::vector<SparseRow> plane = {row_from_dense({Rat(1), Rat(0)}),
                                  row_from_dense({Rat(0), Rat(1)})};
  CHECK(in_span(SparseRow{}, plane, 2));
  CHECK(in_span(row_from_dense({Rat(1), Rat(1)}), plane, 2));
  std::vector<SparseRow> zero_sum = {
      row_from_dense({Rat(1), Rat(-1), Rat(0)}),
      row_from_dense({Rat(0), Rat(1), Rat(-1)})};
  CHECK_FALSE(in_span(row_from_dense({Rat(1), Rat(1), Rat(1)}), zero_sum, 3));
}

TEST_CASE("row space accumulates a reduced echelon basis") {
  RowSpace rs(3);
  CHECK(rs.add(row_from_dense({Rat(1), Rat(2), Rat(0)})));
  CHECK_FALSE(rs.add(row_from_dense({Rat(2), Rat(4), Rat(0)})));
  CHECK(rs.add(row_from_dense({Rat(0), Rat(0), Rat(1)})));
  CHECK(rs.rank() == 2);
  CHECK(rs.contains(row_from_dense({Rat(3), Rat(6), Rat(5)})));
  CHECK_FALSE(rs.contains(row_from_dense({Rat(0), Rat(1), Rat(0)})));
  auto basis = rs.echelon_basis();
  REQUIRE(basis.size() == 2);
  CHECK(basis[0].front().second == Rat(1));
}

TEST_CASE("nullspace and solve are exact") {
  RatMatrix m = RatMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
  auto ker = nullspace(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] * Rat(1) + ker[0][1] * Rat(2) == Rat(0));
  auto sol = solve(RatMatrix::from_rows({{Rat(2), Rat(0)}, {Rat(0), Rat(3)}}),
                   {Rat(1), Rat(1)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == rat_of(1, 2));
  CHECK((*sol)[1] == rat_of(1, 3));
  CHECK_FALSE(solve(m, {Rat(1), Rat(3)}).has_value());
}

TEST_CASE("product of sum and difference") {
  auto v = VarSet::standard(1);
  Poly x = var(v, "x1"), y = var(v, "y1");
  CHECK((x + y) * (x - y) == x * x - y * y);
}

TEST_CASE("alternating quadratic squares to its hand expansion") {
  auto v = VarSet::standard(2);
  Poly x1 = var(v, "x1"), y1 = var(v, "y1");
  Poly x2 = var(v, "x2"), y2 = var(v, "y2");
  Poly d = x1 * y2 - y1 * x2;
  CHECK(d * d == x1 * x1 * y2 * y2 - (x1 * y1 * x2 * y2).scaled(Rat(2)) +
                     y1 * y1 * x2 * x2);
}

TEST_CASE("partial derivatives") {
  auto v = VarSet::standard(2);
  Poly x1 = var(v, "x1"), y1 = var(v, "y1"), y2 = var(v, "y2");
  CHECK(partial(x1.pow(3), v->index_of("x1")) == (x1 * x1).scaled(Rat(3)));
  CHECK(partial(x1 * y2, v->index_of("x2")).is_zero());
  CHECK(partial(x1 * x1 * y1, v->index_of("y1")) == x1 * x1);
}

TEST_CASE("linear substitution") {
  auto v = VarSet::standard(2);
  Poly x1 = var(v, "x1"), y1 = var(v, "y1");
  Poly x2 = var(v, "x2"), y2 = var(v, "y2");
  Poly d = x1 * y2 - y1 * x2;
  CHECK(linear_substitute(d, RatMatrix::identity(4)) == d);
  // Swap of the two pairs: x1<->x2, y1<->y2 negates the alternating form.
  RatMatrix swap(4, 4);
  swap.set(0, 2, Rat(1));
  swap.set(1, 3, Rat(1));
  swap.set(2, 0, Rat(1));
  swap.set(3, 1, Rat(1));
  CHECK(linear_substitute(d, swap) == -d);
}

TEST_CASE("monomial enumeration") {
  auto v = VarSet::standard(2);
  auto d0 = monomial_basis(v, 0);
  REQUIRE(d0.size() == 1);
  CHECK(d0[0].degree() == 0);
  CHECK(monomial_basis(v, 2).size() == 10);
  CHECK(monomial_basis(v, BiDegree{1, 1}).size() == 4);
}

TEST_CASE("vectorization against a fixed basis") {
  auto v = VarSet::standard(1);
  Poly x = var(v, "x1"), y = var(v, "y1");
  Monomial x2{{2, 0}}, xy{{1, 1}}, y2{{0, 2}};
  MonomialIndex idx({x2, xy, y2});
  CHECK(vectorize(Poly::zero(v), idx).empty());
  SparseRow r = vectorize(x * y, idx);
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == 1);
  CHECK(r[0].second == Rat(1));
  Poly f = (x * x).scaled(Rat(3)) - (y * y).scaled(rat_of(1, 2));
  auto dense = row_to_dense(vectorize(f, idx), 3);
  CHECK(dense[0] == Rat(3));
  CHECK(dense[1] == Rat(0));
  CHECK(dense[2] == rat_of(-1, 2));
  CHECK(from_row(v, vectorize(f, idx), {x2, xy, y2}) == f);
  CHECK_THROWS_AS(vectorize(x, idx), std::invalid_argument);
}

TEST_CASE("degrees, components, and bidegrees") {
  auto v = VarSet::standard(2);
  Poly x1 = var(v, "x1"), y2 = var(v, "y2");
  Poly f = x1 * x1 + y2;
  CHECK(Poly::zero(v).degree() == -1);
  CHECK(f.degree() == 2);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(f.component(1) == y2);
  CHECK(f.component(2) == x1 * x1);
  CHECK(f.component(5).is_zero());
  CHECK(x1.pow(2).bidegree() == BiDegree{2, 0});
  CHECK((x1 * y2).bidegree() == BiDegree{1, 1});
  CHECK_FALSE(f.bidegree().has_value());
  CHECK(f.component(BiDegree{0, 1}) == y2);
}

TEST_CASE("canonical printing") {
  auto v = VarSet::standard(1);
  Poly x = var(v, "x1"), y = var(v, "y1");
  CHECK((x - y).str() == "x1 - y1");
  CHECK((x * x * y.scaled(rat_of(-1, 2)) + Poly::constant(v, Rat(3))).str() ==
        "-1/2*x1^2*y1 + 3");
  CHECK(Poly::zero(v).str() == "0");
}

TEST_CASE("mixing variable sets throws") {
  auto v1 = VarSet::standard(1);
  auto v2 = VarSet::standard(1);
  Poly a = Poly::variable(v1, 0), b = Poly::variable(v2, 0);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("degree cap") {
  auto v = VarSet::standard(1);
  Poly x = var(v, "x1");
  CHECK(x.pow(64).degree() == 64);
  CHECK_THROWS_AS(x.pow(32) * x.pow(33), std::overflow_error);
}

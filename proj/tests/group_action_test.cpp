#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <variant>
#include <vector>

#include "poishom/case_spec.hpp"
#include "poishom/group_action.hpp"

using namespace poishom;

namespace {
// (size, fixed_space_dim) pairs, sorted, for order-insensitive comparison.
std::vector<std::pair<int, int>> class_profile(const Action& a) {
  std::vector<std::pair<int, int>> p;
  for (const ConjClass& c : conjugacy_classes(a))
    p.emplace_back(c.size, c.fixed_space_dim);
  std::sort(p.begin(), p.end());
  return p;
}
}  // namespace

TEST_CASE("matrix groups close to the expected orders") {
  CHECK(group_order(make_a2().action) == 6);
  CHECK(group_order(make_b2().action) == 8);
  CHECK(group_order(make_g2().action) == 12);
}

TEST_CASE("closure cap aborts runaway generation") {
  CaseSpec spec = make_a2();
  const auto& a = std::get<MatrixAction>(spec.action);
  MatrixAction capped(a.vars(), a.generators(), 3);
  CHECK_THROWS_AS(capped.elements(), std::runtime_error);
}

TEST_CASE("degree zero invariants are the constants") {
  CaseSpec spec = make_b2();
  const auto& basis = invariant_basis(spec.action, 0);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == Poly::constant(spec.vars, Rat(1)));
  CHECK(invariant_dim(spec.action, 1) == 0);
}

TEST_CASE("quadratic invariants of the signed pair group") {
  CaseSpec spec = make_b2();
  CHECK(invariant_dim(spec.action, 2) == 3);
  CHECK(invariant_dim(spec.action, BiDegree{2, 0}) == 1);
  CHECK(invariant_dim(spec.action, BiDegree{1, 1}) == 1);
  CHECK(invariant_dim(spec.action, BiDegree{0, 2}) == 1);
}

TEST_CASE("diagonal invariance is a congruence on exponents") {
  CaseSpec spec = make_cyclic(3);
  const auto& a = std::get<DiagonalAction>(spec.action);
  CHECK(a.order() == 3);
  // Degree 2: only the mixed x_i y_j monomials have weight zero mod 3.
  CHECK(a.invariant_dim(2) == 4);
  CHECK(a.invariant_dim(BiDegree{1, 1}) == 4);
  CHECK(a.invariant_dim(BiDegree{2, 0}) == 0);
  // Degree 3: the pure powers appear, x^alpha with |alpha| = 3.
  CHECK(a.invariant_dim(BiDegree{3, 0}) == 4);
  Monomial x1y2{{1, 0, 0, 1}};
  Monomial x1x2{{1, 0, 1, 0}};
  CHECK(a.invariant(x1y2));
  CHECK_FALSE(a.invariant(x1x2));
  CHECK(a.weight(x1x2) == std::vector<int>{1, 1});
}

TEST_CASE("sum zero subgroup elements in lexicographic order") {
  CaseSpec spec = make_z3(2);
  const auto& a = std::get<DiagonalAction>(spec.action);
  std::vector<std::vector<int>> expect = {{0, 0}, {1, 2}, {2, 1}};
  CHECK(a.elements() == expect);
  CHECK(class_profile(spec.action) ==
        std::vector<std::pair<int, int>>{{1, 0}, {1, 0}, {1, 4}});
}

TEST_CASE("conjugacy classes of the triangle group") {
  CHECK(class_profile(make_a2().action) ==
        std::vector<std::pair<int, int>>{{1, 4}, {2, 0}, {3, 2}});
}

TEST_CASE("fixed point free class counts") {
  CHECK(fixed_point_free_class_count(make_a2().action) == 1);
  CHECK(fixed_point_free_class_count(make_b2().action) == 2);
  CHECK(fixed_point_free_class_count(make_g2().action) == 3);
  CHECK(fixed_point_free_class_count(make_z3(3).action) == 2);
  CHECK(fixed_point_free_class_count(make_pm1(2).action) == 1);
}

TEST_CASE("triangle generators are structure automorphisms") {
  CaseSpec spec = make_a2();
  CHECK(preserves_structure(std::get<MatrixAction>(spec.action),
                            spec.structure));
}

TEST_CASE("a homothety is not a structure automorphism") {
  auto vars = VarSet::standard(1);
  RatMatrix twice = RatMatrix::identity(2);
  twice.set(0, 0, Rat(2));
  twice.set(1, 1, Rat(2));
  MatrixAction a(vars, {twice}, 50);
  // The closure is infinite; the generator check needs no closure.
  CHECK_FALSE(preserves_structure(a, PoissonStructure::standard(vars)));
}

TEST_CASE("side preservation detects x/y mixing") {
  CaseSpec spec = make_b2();
  CHECK(std::get<MatrixAction>(spec.action).preserves_sides());
  auto vars = VarSet::standard(1);
  RatMatrix swap(2, 2);
  swap.set(0, 1, Rat(1));
  swap.set(1, 0, Rat(1));
  MatrixAction mixing(vars, {swap});
  CHECK(mixing.order() == 2);
  CHECK_FALSE(mixing.preserves_sides());
}

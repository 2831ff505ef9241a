#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "poishom/case_spec.hpp"
#include "poishom/poisson.hpp"

using namespace poishom;

namespace {
Poly var(const VarSetPtr& v, const std::string& name) {
  return Poly::variable(v, v->index_of(name));
}
}  // namespace

TEST_CASE("standard bracket of a coordinate pair is 1") {
  auto v = VarSet::standard(2);
  PoissonStructure ps = PoissonStructure::standard(v);
  Poly x1 = var(v, "x1"), y1 = var(v, "y1");
  CHECK(bracket(ps, x1, y1) == Poly::constant(v, Rat(1)));
  CHECK(bracket(ps, y1, x1) == Poly::constant(v, Rat(-1)));
  CHECK(bracket(ps, x1, var(v, "y2")).is_zero());
}

TEST_CASE("triangle structure pairs opposite corners with -3") {
  CaseSpec spec = make_a2();
  Poly a1 = var(spec.vars, "a1"), b2 = var(spec.vars, "b2");
  CHECK(bracket(spec.structure, a1, b2) == Poly::constant(spec.vars, Rat(-3)));
}

TEST_CASE("raising operator sends y1 to x1") {
  CaseSpec spec = make_b2();
  const Sl2Context& sl2 = *spec.sl2;
  Poly x1 = var(spec.vars, "x1"), y1 = var(spec.vars, "y1");
  CHECK(bracket(sl2.ps, sl2.E, y1) == x1);
}

TEST_CASE("weight operator kills the balanced product") {
  CaseSpec spec = make_b2();
  const Sl2Context& sl2 = *spec.sl2;
  Poly x1 = var(spec.vars, "x1"), y2 = var(spec.vars, "y2");
  CHECK(bracket(sl2.ps, sl2.H, x1 * y2).is_zero());
}

TEST_CASE("bracket is antisymmetric and a biderivation") {
  auto v = VarSet::standard(2);
  PoissonStructure ps = PoissonStructure::standard(v);
  Poly f = var(v, "x1") * var(v, "y2") + var(v, "x2").pow(2);
  Poly g = var(v, "y1").pow(3) - var(v, "x1") * var(v, "x2");
  Poly h = var(v, "x1") + var(v, "y1") * var(v, "y2");
  CHECK(bracket(ps, f, g) == -bracket(ps, g, f));
  CHECK(bracket(ps, f * g, h) == f * bracket(ps, g, h) + g * bracket(ps, f, h));
  Poly jac = bracket(ps, f, bracket(ps, g, h)) +
             bracket(ps, g, bracket(ps, h, f)) +
             bracket(ps, h, bracket(ps, f, g));
  CHECK(jac.is_zero());
}

TEST_CASE("bracket of homogeneous inputs drops degree by 2") {
  auto v = VarSet::standard(2);
  PoissonStructure ps = PoissonStructure::standard(v);
  Poly f = var(v, "x1").pow(3) * var(v, "y2");
  Poly g = var(v, "y1").pow(2) * var(v, "x2");
  Poly b = bracket(ps, f, g);
  REQUIRE_FALSE(b.is_zero());
  CHECK(b.is_homogeneous());
  CHECK(b.degree() == f.degree() + g.degree() - 2);
}

TEST_CASE("iterated lowering") {
  CaseSpec spec = make_b2();
  const Sl2Context& sl2 = *spec.sl2;
  // ad(F)^2 on E lands on F up to the scalar fixed by the triple relations.
  CHECK(ad_power(sl2.ps, sl2.F, 2, sl2.E) == sl2.F.scaled(Rat(-2)));
  CHECK(ad_power(sl2.ps, sl2.F, 0, sl2.E) == sl2.E);
}

TEST_CASE("structure matrices must be antisymmetric and invertible") {
  auto v = VarSet::standard(1);
  RatMatrix sym(2, 2);
  sym.set(0, 1, Rat(1));
  sym.set(1, 0, Rat(1));
  CHECK_THROWS_AS(PoissonStructure::from_matrix(v, sym), std::invalid_argument);
  CHECK_THROWS_AS(PoissonStructure::from_matrix(v, RatMatrix(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("bracket across variable sets throws") {
  auto v1 = VarSet::standard(1);
  auto v2 = VarSet::standard(1);
  PoissonStructure ps = PoissonStructure::standard(v1);
  CHECK_THROWS_AS(bracket(ps, Poly::variable(v1, 0), Poly::variable(v2, 0)),
                  std::invalid_argument);
}

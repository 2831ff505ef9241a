#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "poishom/case_spec.hpp"
#include "poishom/sl2.hpp"

using namespace poishom;

namespace {
Poly var(const VarSetPtr& v, const std::string& name) {
  return Poly::variable(v, v->index_of(name));
}

const Poly* residual(const TripleReport& r, const std::string& name) {
  for (const auto& [n, p] : r.residuals)
    if (n == name) return &p;
  return nullptr;
}
}  // namespace

TEST_CASE("the stored triples satisfy the sl2 relations") {
  for (const char* family : {"A2", "B2", "G2"}) {
    CaseSpec spec = make_case(family);
    REQUIRE(spec.sl2.has_value());
    TripleReport r = verify_triple(*spec.sl2);
    CHECK(r.ok());
    REQUIRE(r.residuals.size() == 6);
    CHECK(r.residuals[0].first == "{E,F}-H");
  }
}

TEST_CASE("a perturbed raising operator is detected") {
  CaseSpec spec = make_b2();
  Sl2Context ctx = *spec.sl2;
  ctx.E += var(spec.vars, "x1") * var(spec.vars, "x2");
  TripleReport r = verify_triple(ctx);
  CHECK_FALSE(r.ok());
  const Poly* ef = residual(r, "{E,F}-H");
  REQUIRE(ef != nullptr);
  CHECK_FALSE(ef->is_zero());
  // The perturbation keeps weight 2, so the H relation still holds.
  const Poly* he = residual(r, "{H,E}-2E");
  REQUIRE(he != nullptr);
  CHECK(he->is_zero());
}

TEST_CASE("lowering chain of the raising operator") {
  CaseSpec spec = make_b2();
  const Sl2Context& ctx = *spec.sl2;
  std::vector<Poly> chain = lowering_chain(ctx, ctx.E, 2);
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == ctx.E);
  CHECK(chain[1] == -ctx.H);
  CHECK(chain[2] == ctx.F.scaled(Rat(-2)));
}

TEST_CASE("constants form a weight zero chain") {
  CaseSpec spec = make_b2();
  Poly one = Poly::constant(spec.vars, Rat(1));
  std::vector<Poly> chain = lowering_chain(*spec.sl2, one, 0);
  REQUIRE(chain.size() == 1);
  CHECK(chain[0] == one);
}

TEST_CASE("a wrong weight is rejected") {
  CaseSpec spec = make_b2();
  CHECK_THROWS_AS(lowering_chain(*spec.sl2, spec.sl2->E, 1),
                  std::invalid_argument);
}

TEST_CASE("highest weight vectors in low degree") {
  CaseSpec spec = make_b2();
  auto hwv0 = highest_weight_vectors(*spec.sl2, spec.action, 0);
  REQUIRE(hwv0.size() == 1);
  CHECK(hwv0[0].first == Poly::constant(spec.vars, Rat(1)));
  CHECK(hwv0[0].second == 0);
}

TEST_CASE("degree four vectors split by weight") {
  CaseSpec spec = make_b2();
  const Sl2Context& ctx = *spec.sl2;
  auto hwv = highest_weight_vectors(ctx, spec.action, 4);
  std::vector<int> weights;
  for (const auto& [v, w] : hwv) {
    weights.push_back(w);
    CHECK(bracket(ctx.ps, ctx.E, v).is_zero());
    CHECK(bracket(ctx.ps, ctx.H, v) == v.scaled(Rat(w)));
  }
  std::sort(weights.begin(), weights.end());
  CHECK(weights == std::vector<int>{0, 4, 4});
  // The weight zero vector is the invariant square of the joint invariant.
  for (const auto& [v, w] : hwv)
    if (w == 0) CHECK(divide_exact(v, ctx.D, 2).degree() == 0);
}

TEST_CASE("the triangle ring has one cubic highest weight vector") {
  CaseSpec spec = make_a2();
  auto hwv = highest_weight_vectors(*spec.sl2, spec.action, 3);
  REQUIRE(hwv.size() == 1);
  CHECK(hwv[0].second == 3);
}

TEST_CASE("pairing constants of the stored certificates") {
  CaseSpec b2 = make_b2();
  PairingConstants pc = pairing_constants(*b2.sl2, b2.cert->P, b2.cert->Q,
                                          b2.cert->beta);
  CHECK(pc.lambda == Rat(-288));
  CHECK(pc.mu == Rat(-48));
  CHECK(pc.alpha == 4);

  CaseSpec a2 = make_a2();
  pc = pairing_constants(*a2.sl2, a2.cert->P, a2.cert->Q, a2.cert->beta);
  CHECK(pc.lambda == Rat(-144));
  CHECK(pc.mu == Rat(-36));
  CHECK(pc.alpha == 2);

  CaseSpec g2 = make_g2();
  pc = pairing_constants(*g2.sl2, g2.cert->P, g2.cert->Q, g2.cert->beta);
  CHECK(pc.lambda == Rat(207360));
  CHECK(pc.mu == Rat(25920));
  CHECK(pc.alpha == 6);
}

TEST_CASE("certificates recompute and classify the exhibited power") {
  CaseSpec spec = make_b2();
  auto c0 = certify_power(*spec.sl2, spec.cert->P, spec.cert->Q,
                          spec.cert->beta, 0);
  REQUIRE(c0.has_value());
  CHECK(c0->power == 4);
  CHECK(c0->coefficient == Rat(-288));
  CHECK(c0->invariant);
  auto c1 = certify_power(*spec.sl2, spec.cert->P, spec.cert->Q,
                          spec.cert->beta, 1);
  REQUIRE(c1.has_value());
  CHECK(c1->power == 5);
  CHECK(c1->coefficient == Rat(-336));
  CHECK_FALSE(c1->invariant);
}

TEST_CASE("exact division by powers of the joint invariant") {
  CaseSpec spec = make_b2();
  const Poly& D = spec.sl2->D;
  CHECK(divide_exact(D.pow(3), D, 2) == D);
  CHECK(divide_exact(D, D, 0) == D);
  CHECK_THROWS_AS(divide_exact(spec.sl2->E, D, 1), std::invalid_argument);
}

// Constant-coefficient Poisson structures and the induced bracket.
//
// The bracket of polynomials f, g is sum_{i,j} P[i][j] (df/dv_i)(dg/dv_j)
// for a fixed antisymmetric invertible rational matrix P. On homogeneous
// inputs it is homogeneous of degree deg f + deg g - 2.
#pragma once

#include "poishom/poly.hpp"

#include <tuple>
#include <vector>

namespace poishom {

struct PoissonStructure {
  VarSetPtr vars;
  RatMatrix P;
  // Nonzero entries of P, precomputed for bracket evaluation.
  std::vector<std::tuple<int, int, Rat>> entries;

  // {x_k, y_k} = 1 on each pair of a bigraded variable set.
  static PoissonStructure standard(VarSetPtr vars);
  // Arbitrary constant structure; throws unless P is antisymmetric and
  // invertible.
  static PoissonStructure from_matrix(VarSetPtr vars, RatMatrix P);
};

Poly bracket(const PoissonStructure& ps, const Poly& f, const Poly& g);

// k-fold application of {h, -}.
Poly ad_power(const PoissonStructure& ps, const Poly& h, int k, const Poly& f);

}  // namespace poishom

#include "poishom/poisson.hpp"

#include <stdexcept>

namespace poishom {

namespace {

void collect_entries(PoissonStructure& ps) {
  for (int i = 0; i < ps.P.rows(); ++i)
    for (const auto& [j, v] : ps.P.row(i)) ps.entries.emplace_back(i, j, v);
}

}  // namespace

PoissonStructure PoissonStructure::standard(VarSetPtr vars) {
  if (!vars->bigraded())
    throw std::invalid_argument(
        "PoissonStructure::standard: variable set has no pairs");
  RatMatrix P(vars->size(), vars->size());
  for (const auto& [xi, yi] : vars->pairs) {
    P.set(xi, yi, Rat(1));
    P.set(yi, xi, Rat(-1));
  }
  PoissonStructure ps{std::move(vars), std::move(P), {}};
  collect_entries(ps);
  return ps;
}

PoissonStructure PoissonStructure::from_matrix(VarSetPtr vars, RatMatrix P) {
  if (P.rows() != vars->size() || P.cols() != vars->size())
    throw std::invalid_argument("PoissonStructure: matrix size mismatch");
  if (P.transpose().add_scaled(P, Rat(1)) != RatMatrix(P.rows(), P.cols()))
    throw std::invalid_argument("PoissonStructure: matrix not antisymmetric");
  if (!P.inverse())
    throw std::invalid_argument("PoissonStructure: matrix not invertible");
  PoissonStructure ps{std::move(vars), std::move(P), {}};
  collect_entries(ps);
  return ps;
}

Poly bracket(const PoissonStructure& ps, const Poly& f, const Poly& g) {
  if (f.vars() != ps.vars || g.vars() != ps.vars)
    throw std::invalid_argument("bracket: variable set mismatch");
  int n = ps.vars->size();
  // Partials are shared across the P entries touching them.
  std::vector<Poly> df(n, Poly(ps.vars)), dg(n, Poly(ps.vars));
  std::vector<bool> have_df(n, false), have_dg(n, false);
  Poly r(ps.vars);
  for (const auto& [i, j, v] : ps.entries) {
    if (!have_df[i]) {
      df[i] = partial(f, i);
      have_df[i] = true;
    }
    if (df[i].is_zero()) continue;
    if (!have_dg[j]) {
      dg[j] = partial(g, j);
      have_dg[j] = true;
    }
    if (dg[j].is_zero()) continue;
    r += (df[i] * dg[j]).scaled(v);
  }
  return r;
}

Poly ad_power(const PoissonStructure& ps, const Poly& h, int k, const Poly& f) {
  if (k < 0) throw std::invalid_argument("ad_power: negative exponent");
  Poly r = f;
  for (int i = 0; i < k; ++i) r = bracket(ps, h, r);
  return r;
}

}  // namespace poishom

#include "poishom/sl2.hpp"

#include <stdexcept>

namespace poishom {

bool TripleReport::ok() const {
  for (const auto& [name, r] : residuals) {
    (void)name;
    if (!r.is_zero()) return false;
  }
  return true;
}

TripleReport verify_triple(const Sl2Context& ctx) {
  TripleReport rep;
  auto br = [&](const Poly& a, const Poly& b) { return bracket(ctx.ps, a, b); };
  rep.residuals.emplace_back("{E,F}-H", br(ctx.E, ctx.F) - ctx.H);
  rep.residuals.emplace_back("{H,E}-2E", br(ctx.H, ctx.E) - ctx.E.scaled(2));
  rep.residuals.emplace_back("{H,F}+2F", br(ctx.H, ctx.F) + ctx.F.scaled(2));
  rep.residuals.emplace_back("{E,D}", br(ctx.E, ctx.D));
  rep.residuals.emplace_back("{F,D}", br(ctx.F, ctx.D));
  rep.residuals.emplace_back("{H,D}", br(ctx.H, ctx.D));
  return rep;
}

std::vector<Poly> lowering_chain(const Sl2Context& ctx, const Poly& top,
                                 int beta) {
  if (beta < 0) throw std::invalid_argument("lowering_chain: negative weight");
  std::vector<Poly> chain{top};
  for (int i = 0; i < beta; ++i)
    chain.push_back(bracket(ctx.ps, ctx.F, chain.back()));
  if (!bracket(ctx.ps, ctx.F, chain.back()).is_zero())
    throw std::invalid_argument(
        "lowering_chain: chain does not terminate at the stated weight");
  return chain;
}

std::vector<std::pair<Poly, int>> highest_weight_vectors(
    const Sl2Context& ctx, const Action& action, int d) {
  std::vector<std::pair<Poly, int>> out;
  const VarSetPtr& vars = action_vars(action);
  for (int i = 0; i <= d; ++i) {
    BiDegree bd{i, d - i};
    const std::vector<Poly>& cell = invariant_basis(action, bd);
    if (cell.empty()) continue;
    // ad(E) raises the bidegree by (1, -1); express images over the target
    // cell's monomials and take the kernel.
    std::vector<Monomial> target = monomial_basis(vars, BiDegree{i + 1, d - i - 1});
    RatMatrix m(static_cast<int>(cell.size()),
                static_cast<int>(target.size()));
    if (!target.empty()) {
      MonomialIndex index(target);
      for (size_t r = 0; r < cell.size(); ++r) {
        Poly img = bracket(ctx.ps, ctx.E, cell[r]);
        for (const auto& [c, v] : vectorize(img, index))
          m.set(static_cast<int>(r), c, v);
      }
    }
    for (const auto& coeffs : nullspace(m.transpose())) {
      Poly v(vars);
      for (size_t r = 0; r < cell.size(); ++r)
        if (coeffs[r] != 0) v += cell[r].scaled(coeffs[r]);
      // Weight of the cell under ad(H) is xdeg - ydeg.
      out.emplace_back(std::move(v), bd.xdeg - bd.ydeg);
    }
  }
  return out;
}

namespace {

// Writes f = c * d^k exactly; throws when f is not such a multiple.
Rat scalar_of_power(const Sl2Context& ctx, const Poly& f, int k,
                    const char* what) {
  if (f.is_zero()) return Rat(0);
  Poly q = divide_exact(f, ctx.D, k);
  if (q.degree() != 0)
    throw std::invalid_argument(std::string(what) +
                                ": not a scalar multiple of the power");
  return q.constant_term();
}

Poly pairing_sum(const Sl2Context& ctx, const std::vector<Poly>& pchain,
                 const std::vector<Poly>& qchain, int beta,
                 const Poly& extra) {
  // sum_i (-1)^i {P^(beta-2i), Q^(-(beta-2i)) * extra}; the chain entry of
  // weight -(beta-2i) is qchain[beta-i].
  Poly sum(ctx.ps.vars);
  for (int i = 0; i <= beta; ++i) {
    Poly rhs = qchain[beta - i] * extra;
    Poly term = bracket(ctx.ps, pchain[i], rhs);
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace

PairingConstants pairing_constants(const Sl2Context& ctx, const Poly& P,
                                   const Poly& Q, int beta) {
  std::vector<Poly> pchain = lowering_chain(ctx, P, beta);
  std::vector<Poly> qchain = lowering_chain(ctx, Q, beta);
  int alpha = (P.degree() + Q.degree() - 2) / 2;
  Poly one = Poly::constant(ctx.ps.vars, Rat(1));
  PairingConstants pc;
  pc.alpha = alpha;
  pc.lambda = scalar_of_power(ctx, pairing_sum(ctx, pchain, qchain, beta, one),
                              alpha, "pairing_constants: lambda");
  // mu pairs the chains against D through the derivation property:
  // sum_i (-1)^i {P^(beta-2i), D} Q^(-(beta-2i)) = mu D^(alpha+1).
  Poly mu_sum(ctx.ps.vars);
  for (int i = 0; i <= beta; ++i) {
    Poly term = bracket(ctx.ps, pchain[i], ctx.D) * qchain[beta - i];
    mu_sum += (i % 2 == 0) ? term : -term;
  }
  pc.mu = scalar_of_power(ctx, mu_sum, alpha + 1, "pairing_constants: mu");
  return pc;
}

std::optional<Certificate> certify_power(const Sl2Context& ctx, const Poly& P,
                                         const Poly& Q, int beta, int k) {
  if (k < 0) throw std::invalid_argument("certify_power: negative k");
  PairingConstants pc = pairing_constants(ctx, P, Q, beta);
  Rat coeff = pc.lambda + Rat(k) * pc.mu;
  // Direct recomputation: the certificate is the identity
  // sum_i (-1)^i {P^(beta-2i), Q^(-(beta-2i)) D^k} = (lambda + k mu)
  // D^(alpha+k), checked exactly rather than inferred.
  std::vector<Poly> pchain = lowering_chain(ctx, P, beta);
  std::vector<Poly> qchain = lowering_chain(ctx, Q, beta);
  Poly sum = pairing_sum(ctx, pchain, qchain, beta, ctx.D.pow(k));
  if (sum != ctx.D.pow(pc.alpha + k).scaled(coeff))
    throw std::runtime_error("certify_power: pairing identity failed");
  if (coeff == 0) return std::nullopt;
  Certificate cert;
  cert.k = k;
  cert.power = pc.alpha + k;
  cert.coefficient = coeff;
  cert.invariant = ctx.N > 0 && cert.power % ctx.N == 0;
  return cert;
}

Poly divide_exact(const Poly& f, const Poly& d, int k) {
  if (k < 0) throw std::invalid_argument("divide_exact: negative power");
  if (d.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  Poly cur = f;
  for (int step = 0; step < k; ++step) {
    // Classical division by the single divisor d; a nonzero remainder means
    // the division is not exact.
    Poly quotient(cur.vars());
    Poly rest = cur;
    const auto& [dmon, dcoeff] = *d.terms().rbegin();
    while (!rest.is_zero()) {
      const auto& [lm, lc] = *rest.terms().rbegin();
      Monomial q = lm;
      bool divisible = true;
      for (size_t i = 0; i < q.e.size(); ++i) {
        if (q.e[i] < dmon.e[i]) {
          divisible = false;
          break;
        }
        q.e[i] = static_cast<uint8_t>(q.e[i] - dmon.e[i]);
      }
      if (!divisible)
        throw std::invalid_argument("divide_exact: not divisible");
      Poly qterm = Poly::term(cur.vars(), q, lc / dcoeff);
      quotient += qterm;
      rest -= qterm * d;
    }
    cur = quotient;
  }
  return cur;
}

}  // namespace poishom

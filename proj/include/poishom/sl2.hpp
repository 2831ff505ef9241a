// The hidden sl2 triple inside the invariant ring and the certificate
// machinery built on it.
//
// E, F, H are invariant quadratics with {E, F} = H, {H, E} = 2E,
// {H, F} = -2F, and D is a joint ad-invariant ({E,D} = {F,D} = {H,D} = 0)
// on which the group acts by a root of unity of order N, so exactly the
// powers D^(kN) are invariant.
//
// Certificates: given a highest weight vector P of ad(H)-weight beta whose
// lowering chain pairs against the chain of a partner Q to produce
// sum_i (-1)^i {P^(beta-2i), Q^(-(beta-2i))} = lambda D^alpha and
// sum_i (-1)^i {P^(beta-2i), D} Q^(-(beta-2i)) = mu D^(alpha+1), every k
// with lambda + k mu != 0 exhibits D^(alpha+k) inside the bracket ideal
// generated in invariants, hence (alpha + k = multiple of N) inside
// {S^G, S^G}.
#pragma once

#include "poishom/group_action.hpp"

#include <optional>

namespace poishom {

struct Sl2Context {
  PoissonStructure ps;
  Poly E, F, H, D;
  int N = 1;  // order of the character by which the group scales D
};

struct TripleReport {
  // Named residuals, all zero when the triple relations hold.
  std::vector<std::pair<std::string, Poly>> residuals;
  bool ok() const;
};

// Residuals of {E,F}-H, {H,E}-2E, {H,F}+2F, {E,D}, {F,D}, {H,D}.
TripleReport verify_triple(const Sl2Context& ctx);

// Entries chain[i] = ad(F)^i applied to top, for i = 0..beta. The next
// lowering step must vanish; throws std::invalid_argument otherwise (the
// input was not a highest weight vector of weight beta).
std::vector<Poly> lowering_chain(const Sl2Context& ctx, const Poly& top,
                                 int beta);

// Highest weight vectors of the invariant ring in degree d: pairs (v, w)
// with ad(E) v = 0 and ad(H) v = w v, one canonical basis vector per kernel
// dimension, grouped by bidegree cell. Requires a side-respecting action.
std::vector<std::pair<Poly, int>> highest_weight_vectors(
    const Sl2Context& ctx, const Action& action, int d);

struct PairingConstants {
  Rat lambda;
  Rat mu;
  int alpha;  // (deg P + deg Q - 2) / 2
};

// Evaluates the two chain pairings for highest weight vectors P (weight
// beta) and Q' = top of the partner chain; Q^(-(beta-2i)) is the chain entry
// of Q' at index beta - i. Throws when either pairing is not an exact
// scalar multiple of the expected power of D.
PairingConstants pairing_constants(const Sl2Context& ctx, const Poly& P,
                                   const Poly& Q, int beta);

struct Certificate {
  int k;            // index in the lambda + k mu family
  int power;        // alpha + k: the exhibited power of D
  Rat coefficient;  // lambda + k mu
  bool invariant;   // power is a multiple of N, so D^power lies in S^G
};

// Certificate for D^(alpha+k): recomputes the full pairing sum against
// D^k and checks it equals (lambda + k mu) D^(alpha+k) exactly; returns
// std::nullopt when lambda + k mu = 0 (no conclusion). The recomputation is
// part of the certificate: a mismatch throws std::runtime_error.
std::optional<Certificate> certify_power(const Sl2Context& ctx, const Poly& P,
                                         const Poly& Q, int beta, int k);

// Exact division f / D^k; throws std::invalid_argument when not divisible.
Poly divide_exact(const Poly& f, const Poly& d, int k);

}  // namespace poishom

// Published closed forms of the bigraded Poincare-Hilbert series and of the
// sl2 character generating series for the rank-2 invariant rings, kept as
// exact numerator/denominator pairs. Expanding them and comparing against
// dimensions counted from invariant bases is an independent cross-check of
// both the series and the bases.
#pragma once

#include "poishom/characters.hpp"
#include "poishom/presentations.hpp"

namespace poishom {

struct ClosedForm {
  std::string label;
  Series2 numer;
  Series2 denom;
};

// Poincare-Hilbert series sum dim S^G(i, j) x^i y^j; first variable x,
// second y. A2 has two published factorizations of the same fraction, both
// returned. G2 has none; its list is empty.
std::vector<ClosedForm> hilbert_closed_forms(RingId ring);

// Character series sum chi_n(q) h^n = Phi(hq, h/q); first variable h,
// second q, suitable for expand_char_series. Published for A2 and B2 only;
// throws std::invalid_argument for G2.
ClosedForm character_closed_form(RingId ring);

}  // namespace poishom

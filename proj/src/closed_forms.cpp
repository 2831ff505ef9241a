#include "poishom/closed_forms.hpp"

#include <initializer_list>
#include <stdexcept>

namespace poishom {

namespace {

struct Term {
  int i, j;
  long c = 1;
};

Series2 poly2(std::initializer_list<Term> terms) {
  Series2 s;
  for (const Term& t : terms) s.add(t.i, t.j, Rat(t.c));
  return s;
}

Series2 product(std::initializer_list<Series2> factors) {
  Series2 r = Series2::one();
  for (const Series2& f : factors) r = r * f;
  return r;
}

Series2 squared(const Series2& f) { return f * f; }

}  // namespace

std::vector<ClosedForm> hilbert_closed_forms(RingId ring) {
  switch (ring) {
    case RingId::A2: {
      // Shared numerator of both factorizations.
      Series2 numer = poly2(
          {{0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 3}});
      Series2 denom_linear = product({
          poly2({{1, 0}, {0, 0}}),                  // x + 1
          poly2({{2, 0}, {1, 0}, {0, 0}}),          // x^2 + x + 1
          squared(poly2({{0, 0}, {1, 0, -1}})),     // (1 - x)^2
          poly2({{0, 1}, {0, 0}}),                  // y + 1
          poly2({{0, 2}, {0, 1}, {0, 0}}),          // y^2 + y + 1
          squared(poly2({{0, 0}, {0, 1, -1}})),     // (1 - y)^2
      });
      Series2 denom_cyclotomic = product({
          poly2({{0, 0}, {2, 0, -1}}),  // 1 - x^2
          poly2({{0, 0}, {3, 0, -1}}),  // 1 - x^3
          poly2({{0, 0}, {0, 2, -1}}),  // 1 - y^2
          poly2({{0, 0}, {0, 3, -1}}),  // 1 - y^3
      });
      return {{"linear factors", numer, denom_linear},
              {"cyclotomic factors", numer, denom_cyclotomic}};
    }
    case RingId::B2: {
      Series2 numer = poly2({{0, 0},
                             {1, 1},
                             {2, 2, 2},
                             {1, 3},
                             {3, 1},
                             {3, 3},
                             {4, 4}});
      Series2 denom = product({
          poly2({{0, 0}, {2, 0}}),               // 1 + x^2
          squared(poly2({{0, 0}, {1, 0, -1}})),  // (1 - x)^2
          squared(poly2({{0, 0}, {1, 0}})),      // (1 + x)^2
          poly2({{0, 0}, {0, 2}}),               // 1 + y^2
          squared(poly2({{0, 0}, {0, 1, -1}})),  // (1 - y)^2
          squared(poly2({{0, 0}, {0, 1}})),      // (1 + y)^2
      });
      return {{"even-degree factors", numer, denom}};
    }
    case RingId::G2:
      return {};
  }
  throw std::logic_error("unreachable");
}

ClosedForm character_closed_form(RingId ring) {
  switch (ring) {
    case RingId::A2: {
      Series2 numer = poly2(
          {{0, 5}, {2, 5}, {3, 4}, {3, 6}, {4, 5}, {6, 5}});
      Series2 denom = product({
          poly2({{1, 1}, {0, 0}}),                  // hq + 1
          poly2({{1, 0}, {0, 1}}),                  // h + q
          poly2({{2, 0}, {1, 1}, {0, 2}}),          // h^2 + hq + q^2
          poly2({{2, 2}, {1, 1}, {0, 0}}),          // h^2q^2 + hq + 1
          squared(poly2({{1, 0}, {0, 1, -1}})),     // (h - q)^2
          squared(poly2({{0, 0}, {1, 1, -1}})),     // (1 - hq)^2
      });
      return {"character series", numer, denom};
    }
    case RingId::B2: {
      Series2 numer = poly2({{0, 6},
                             {2, 6},
                             {4, 4},
                             {4, 6, 2},
                             {4, 8},
                             {6, 6},
                             {8, 6}});
      Series2 denom = product({
          poly2({{2, 2}, {0, 0}}),                  // h^2q^2 + 1
          poly2({{2, 0}, {0, 2}}),                  // h^2 + q^2
          squared(poly2({{1, 1}, {0, 0}})),         // (hq + 1)^2
          squared(poly2({{0, 1}, {1, 0, -1}})),     // (q - h)^2
          squared(poly2({{1, 0}, {0, 1}})),         // (h + q)^2
          squared(poly2({{1, 1}, {0, 0, -1}})),     // (hq - 1)^2
      });
      return {"character series", numer, denom};
    }
    case RingId::G2:
      throw std::invalid_argument(
          "no published character closed form for G2; its characters are the "
          "even-degree A2 characters");
  }
  throw std::logic_error("unreachable");
}

}  // namespace poishom

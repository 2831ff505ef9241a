#include "poishom/characters.hpp"

#include <sstream>
#include <stdexcept>

namespace poishom {

LaurentQ LaurentQ::term(int exponent, long long coeff) {
  LaurentQ p;
  p.add(exponent, coeff);
  return p;
}

void LaurentQ::add(int exponent, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = c_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
  }
}

long long LaurentQ::at(int exponent) const {
  auto it = c_.find(exponent);
  return it == c_.end() ? 0 : it->second;
}

long long LaurentQ::dimension() const {
  long long s = 0;
  for (const auto& [e, v] : c_) {
    (void)e;
    s += v;
  }
  return s;
}

bool LaurentQ::symmetric() const {
  for (const auto& [e, v] : c_)
    if (at(-e) != v) return false;
  return true;
}

LaurentQ LaurentQ::operator+(const LaurentQ& o) const {
  LaurentQ r = *this;
  for (const auto& [e, v] : o.c_) r.add(e, v);
  return r;
}

LaurentQ LaurentQ::operator*(const LaurentQ& o) const {
  LaurentQ r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) r.add(e1 + e2, v1 * v2);
  return r;
}

std::string LaurentQ::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    auto [e, v] = *it;
    if (first) {
      if (v < 0) {
        out << "-";
        v = -v;
      }
    } else {
      out << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (e == 0) {
      out << v;
      continue;
    }
    if (v != 1) out << v;
    out << "q";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

long long BiDimTable::at(int i, int j) const {
  if (i < 0 || j < 0 || i + j > bound)
    throw std::invalid_argument("BiDimTable: bidegree out of range");
  auto it = dims.find({i, j});
  return it == dims.end() ? 0 : it->second;
}

long long BiDimTable::degree_dim(int n) const {
  long long s = 0;
  for (int i = 0; i <= n; ++i) s += at(i, n - i);
  return s;
}

BiDimTable bidim_table(const Action& a, int bound) {
  BiDimTable t;
  t.bound = bound;
  for (int n = 0; n <= bound; ++n)
    for (int i = 0; i <= n; ++i) {
      long long d = invariant_dim(a, BiDegree{i, n - i});
      if (d != 0) t.dims[{i, n - i}] = d;
    }
  return t;
}

LaurentQ sl2_character(const BiDimTable& table, int n) {
  if (n < 0 || n > table.bound)
    throw std::invalid_argument("sl2_character: degree out of table range");
  LaurentQ chi;
  for (int i = 0; i <= n; ++i) chi.add(i - (n - i), table.at(i, n - i));
  return chi;
}

long long trivial_multiplicity(const LaurentQ& chi) {
  long long m = chi.at(0) - chi.at(2);
  if (m < 0)
    throw std::invalid_argument(
        "trivial_multiplicity: negative multiplicity, not a character");
  return m;
}

LaurentQ pairing_character(const BiDimTable& table, int k) {
  if (2 * k + 2 > table.bound)
    throw std::invalid_argument("pairing_character: table bound too small");
  LaurentQ sum;
  for (int i = 0; i <= k + 1; ++i)
    sum = sum + sl2_character(table, 2 * k + 2 - i) * sl2_character(table, i);
  return sum;
}

bool obstruction_holds(const BiDimTable& table, int k) {
  return trivial_multiplicity(pairing_character(table, k)) == 0;
}

Series2 Series2::one() { return term(0, 0, Rat(1)); }

Series2 Series2::term(int i, int j, const Rat& c) {
  Series2 s;
  s.add(i, j, c);
  return s;
}

void Series2::add(int i, int j, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

Rat Series2::at(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Rat(0) : it->second;
}

Series2 Series2::operator+(const Series2& o) const {
  Series2 r = *this;
  for (const auto& [k, v] : o.c_) r.add(k.first, k.second, v);
  return r;
}

Series2 Series2::operator-(const Series2& o) const {
  Series2 r = *this;
  for (const auto& [k, v] : o.c_) r.add(k.first, k.second, -v);
  return r;
}

Series2 Series2::operator*(const Series2& o) const {
  Series2 r;
  for (const auto& [k1, v1] : c_)
    for (const auto& [k2, v2] : o.c_)
      r.add(k1.first + k2.first, k1.second + k2.second, v1 * v2);
  return r;
}

namespace {

Series2 truncate_total(const Series2& s, int bound) {
  Series2 r;
  for (const auto& [k, v] : s.coeffs())
    if (k.first >= 0 && k.second >= 0 && k.first + k.second <= bound)
      r.add(k.first, k.second, v);
  return r;
}

}  // namespace

BiDimTable expand_rational(const Series2& numer, const Series2& denom,
                           int bound) {
  Rat c0 = denom.at(0, 0);
  if (c0 == 0)
    throw std::invalid_argument(
        "expand_rational: denominator has zero constant term");
  // denom = c0 (1 - u) with u supported in positive total degree, so
  // 1/denom = (1/c0) sum_k u^k, a finite sum after truncation.
  Series2 u;
  for (const auto& [k, v] : denom.coeffs()) {
    if (k.first == 0 && k.second == 0) continue;
    if (k.first < 0 || k.second < 0)
      throw std::invalid_argument("expand_rational: negative exponents");
    u.add(k.first, k.second, -v / c0);
  }
  u = truncate_total(u, bound);
  Series2 inv = Series2::one();
  Series2 upow = Series2::one();
  for (int k = 1; k <= bound; ++k) {
    upow = truncate_total(upow * u, bound);
    if (upow.is_zero()) break;
    inv = inv + upow;
  }
  Series2 expansion = truncate_total(numer * inv, bound);
  for (const auto& [k, v] : expansion.coeffs()) {
    (void)k;
    Rat scaled = v / c0;
    if (scaled.get_den() != 1 || scaled < 0)
      throw std::invalid_argument(
          "expand_rational: coefficient is not a nonnegative integer");
  }
  BiDimTable t;
  t.bound = bound;
  for (const auto& [k, v] : expansion.coeffs()) {
    Rat scaled = v / c0;
    if (scaled != 0) t.dims[{k.first, k.second}] = scaled.get_num().get_si();
  }
  return t;
}

std::vector<LaurentQ> expand_char_series(const Series2& numer,
                                         const Series2& denom, int bound) {
  // Group both inputs by powers of h; coefficients are Laurent in q.
  auto by_h = [](const Series2& s) {
    std::map<int, std::map<int, Rat>> parts;
    for (const auto& [k, v] : s.coeffs()) parts[k.first][k.second] = v;
    return parts;
  };
  auto nparts = by_h(numer);
  auto dparts = by_h(denom);
  auto d0 = dparts.find(0);
  if (d0 == dparts.end() || d0->second.size() != 1)
    throw std::invalid_argument(
        "expand_char_series: h^0 part of denominator is not a monomial");
  int shift = d0->second.begin()->first;
  Rat lead = d0->second.begin()->second;
  std::vector<std::map<int, Rat>> s(bound + 1);
  for (int j = 0; j <= bound; ++j) {
    std::map<int, Rat> acc;
    if (auto it = nparts.find(j); it != nparts.end()) acc = it->second;
    for (int i = 1; i <= j; ++i) {
      auto it = dparts.find(i);
      if (it == dparts.end()) continue;
      for (const auto& [e1, v1] : it->second)
        for (const auto& [e2, v2] : s[j - i]) {
          Rat& slot = acc[e1 + e2];
          slot -= v1 * v2;
        }
    }
    // Divide by the monomial c*q^shift.
    for (const auto& [e, v] : acc)
      if (v != 0) s[j][e - shift] = v / lead;
  }
  std::vector<LaurentQ> out(bound + 1);
  for (int j = 0; j <= bound; ++j) {
    for (const auto& [e, v] : s[j]) {
      if (v == 0) continue;
      if (v.get_den() != 1)
        throw std::invalid_argument(
            "expand_char_series: fractional coefficient");
      out[j].add(e, v.get_num().get_si());
    }
  }
  return out;
}

}  // namespace poishom

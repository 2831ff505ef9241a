#include "poishom/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace poishom {

namespace {

void check_pair_count(int pairs) {
  if (pairs < 1 || pairs > 32)
    throw std::invalid_argument("Weyl algebra rank must be between 1 and 32");
}

void check_index(int pairs, int i) {
  if (i < 0 || i >= pairs)
    throw std::invalid_argument("Weyl variable index out of range");
}

}  // namespace

int WeylKey::degree() const {
  int d = 0;
  for (auto e : p) d += e;
  for (auto e : q) d += e;
  return d;
}

bool WeylKeyLess::operator()(const WeylKey& a, const WeylKey& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.p != b.p) return a.p < b.p;
  return a.q < b.q;
}

WeylElement::WeylElement(int pairs) : pairs_(pairs) { check_pair_count(pairs); }

WeylElement WeylElement::zero(int pairs) { return WeylElement(pairs); }

WeylElement WeylElement::one(int pairs) {
  return monomial(pairs, std::vector<uint8_t>(pairs, 0),
                  std::vector<uint8_t>(pairs, 0), Rat(1));
}

WeylElement WeylElement::p(int pairs, int i) {
  check_index(pairs, i);
  std::vector<uint8_t> pe(pairs, 0), qe(pairs, 0);
  pe[i] = 1;
  return monomial(pairs, std::move(pe), std::move(qe), Rat(1));
}

WeylElement WeylElement::q(int pairs, int i) {
  check_index(pairs, i);
  std::vector<uint8_t> pe(pairs, 0), qe(pairs, 0);
  qe[i] = 1;
  return monomial(pairs, std::move(pe), std::move(qe), Rat(1));
}

WeylElement WeylElement::monomial(int pairs, std::vector<uint8_t> pexp,
                                  std::vector<uint8_t> qexp, const Rat& coeff) {
  WeylElement e(pairs);
  if (static_cast<int>(pexp.size()) != pairs ||
      static_cast<int>(qexp.size()) != pairs)
    throw std::invalid_argument("Weyl monomial exponent length mismatch");
  e.add_term(WeylKey{std::move(pexp), std::move(qexp)}, coeff);
  return e;
}

Rat WeylElement::constant_term() const {
  WeylKey unit{std::vector<uint8_t>(pairs_, 0), std::vector<uint8_t>(pairs_, 0)};
  auto it = terms_.find(unit);
  return it == terms_.end() ? Rat(0) : it->second;
}

void WeylElement::add_term(const WeylKey& key, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  if (pairs_ != o.pairs_) throw std::invalid_argument("Weyl rank mismatch");
  WeylElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
  return *this + (-o);
}

WeylElement WeylElement::operator-() const { return scaled(Rat(-1)); }

WeylElement WeylElement::scaled(const Rat& c) const {
  WeylElement r(pairs_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [k, v] : r.terms_) v *= c;
  return r;
}

// Normal-ordered product. Per variable, moving q^b across p^g contributes
// q^b p^g = sum_k (-1)^k k! C(b,k) C(g,k) p^(g-k) q^(b-k); variables with
// distinct indices commute, so the cross terms multiply independently.
WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (pairs_ != o.pairs_) throw std::invalid_argument("Weyl rank mismatch");
  int n = pairs_;
  WeylElement r(n);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      // k_i ranges over 0..min(a.q[i], b.p[i])
      std::vector<int> kmax(n), k(n, 0);
      for (int i = 0; i < n; ++i)
        kmax[i] = std::min<int>(ka.q[i], kb.p[i]);
      for (;;) {
        Rat coeff = ca * cb;
        WeylKey key{std::vector<uint8_t>(n), std::vector<uint8_t>(n)};
        for (int i = 0; i < n; ++i) {
          int b = ka.q[i], g = kb.p[i], ki = k[i];
          Rat factor(1);
          // (-1)^ki ki! C(b,ki) C(g,ki), built as falling factorials
          for (int t = 0; t < ki; ++t) {
            factor *= Rat(-(b - t)) * Rat(g - t);
            factor /= Rat(t + 1);
          }
          coeff *= factor;
          key.p[i] = static_cast<uint8_t>(ka.p[i] + g - ki);
          key.q[i] = static_cast<uint8_t>(b - ki + kb.q[i]);
        }
        r.add_term(key, coeff);
        int pos = 0;
        while (pos < n && k[pos] == kmax[pos]) k[pos++] = 0;
        if (pos == n) break;
        ++k[pos];
      }
    }
  }
  return r;
}

bool WeylElement::operator==(const WeylElement& o) const {
  return pairs_ == o.pairs_ && terms_ == o.terms_;
}

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rat& c = it->second;
    bool negative = c < 0;
    Rat mag = negative ? Rat(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (int i = 0; i < pairs_; ++i) {
      if (it->first.p[i] == 0) continue;
      std::ostringstream f;
      f << 'p' << (i + 1);
      if (it->first.p[i] > 1) f << '^' << static_cast<int>(it->first.p[i]);
      factors.push_back(f.str());
    }
    for (int i = 0; i < pairs_; ++i) {
      if (it->first.q[i] == 0) continue;
      std::ostringstream f;
      f << 'q' << (i + 1);
      if (it->first.q[i] > 1) f << '^' << static_cast<int>(it->first.q[i]);
      factors.push_back(f.str());
    }
    if (factors.empty()) {
      os << rat_str(mag);
      continue;
    }
    if (mag != 1) os << rat_str(mag) << '*';
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << '*';
      os << factors[i];
    }
  }
  return os.str();
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) {
  return a * b - b * a;
}

WeylElement alternating_commutator_sum(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument(
        "the alternating commutator identity needs odd n >= 1");
  WeylElement total = WeylElement::zero(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<uint8_t> xp(n, 0), xq(n, 0), yp(n, 0), yq(n, 0);
    int flips = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        xq[i] = 1;  // x_i = q_i, y_i = p_i
        yp[i] = 1;
        ++flips;
      } else {
        xp[i] = 1;  // x_i = p_i, y_i = q_i
        yq[i] = 1;
      }
    }
    WeylElement x = WeylElement::monomial(n, std::move(xp), std::move(xq), Rat(1));
    WeylElement y = WeylElement::monomial(n, std::move(yp), std::move(yq), Rat(1));
    WeylElement c = commutator(x, y);
    total = total + (flips % 2 ? -c : c);
  }
  return total;
}

WeylElement ordered_commutator_closed_form(int k) {
  if (k < 1 || k > 31)
    throw std::invalid_argument("closed form needs 1 <= k <= 31");
  WeylElement out = WeylElement::zero(k);
  unsigned full = (1u << k) - 1;
  for (unsigned mask = 0; mask < full; ++mask) {  // proper subsets only
    int j = __builtin_popcount(mask);
    std::vector<uint8_t> pe(k, 0), qe(k, 0);
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) pe[i] = qe[i] = 1;
    Rat sign((k - j - 1) % 2 ? -1 : 1);
    out.add_term(WeylKey{std::move(pe), std::move(qe)}, sign);
  }
  return out;
}

}  // namespace poishom

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "poishom/rat.hpp"

namespace poishom {

// Normal-ordered basis monomial p_1^a1 ... p_n^an q_1^b1 ... q_n^bn.
struct WeylKey {
  std::vector<uint8_t> p, q;

  int degree() const;
  bool operator==(const WeylKey& o) const = default;
};

// Graded order, p-exponents before q-exponents; the map's largest element
// is the leading term.
struct WeylKeyLess {
  bool operator()(const WeylKey& a, const WeylKey& b) const;
};

// Element of the rank-n Weyl algebra with [p_i, q_i] = 1, kept in the
// normal-ordered basis (all p factors before all q factors).
class WeylElement {
 public:
  using TermMap = std::map<WeylKey, Rat, WeylKeyLess>;

  explicit WeylElement(int pairs);
  static WeylElement zero(int pairs);
  static WeylElement one(int pairs);
  static WeylElement p(int pairs, int i);
  static WeylElement q(int pairs, int i);
  static WeylElement monomial(int pairs, std::vector<uint8_t> pexp,
                              std::vector<uint8_t> qexp, const Rat& coeff);

  int pairs() const { return pairs_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rat constant_term() const;

  void add_term(const WeylKey& key, const Rat& coeff);

  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement operator-() const;
  WeylElement operator*(const WeylElement& o) const;
  WeylElement scaled(const Rat& c) const;
  bool operator==(const WeylElement& o) const;

  std::string str() const;

 private:
  int pairs_;
  TermMap terms_;
};

WeylElement commutator(const WeylElement& a, const WeylElement& b);

// The alternating sum over all assignments (x_i, y_i) = (p_i, q_i) or
// (q_i, p_i) of (-1)^(number of flips) [x_1...x_n, y_1...y_n]. For odd n it
// collapses to the constant 2. Throws std::invalid_argument for even or
// nonpositive n, where the identity does not apply.
WeylElement alternating_commutator_sum(int n);

// Closed form of [p_1...p_k, q_1...q_k]: the alternating sum over proper
// subsets S of {1..k} of (-1)^(k-|S|-1) prod_{i in S} p_i q_i.
WeylElement ordered_commutator_closed_form(int k);

}  // namespace poishom

// Graded characters of the invariant ring under its sl2 action.
//
// The character of the degree-n component is the Laurent polynomial
// chi_n(q) = sum_{i+j=n} dim S^G(i, j) q^{i-j}: dimensions are counted from
// exact invariant bases, never from evaluations at roots of unity. The
// multiplicity of the trivial sl2 representation in a character is
// [q^0] - [q^2].
#pragma once

#include "poishom/group_action.hpp"

#include <string>

namespace poishom {

// Laurent polynomial in one variable q with integer coefficients.
class LaurentQ {
 public:
  LaurentQ() = default;
  static LaurentQ term(int exponent, long long coeff);

  const std::map<int, long long>& coeffs() const { return c_; }
  long long at(int exponent) const;
  bool is_zero() const { return c_.empty(); }
  // Value at q = 1 (the dimension of the underlying space).
  long long dimension() const;
  bool symmetric() const;  // invariant under q -> 1/q

  LaurentQ operator+(const LaurentQ& o) const;
  LaurentQ operator*(const LaurentQ& o) const;
  bool operator==(const LaurentQ& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentQ& o) const { return c_ != o.c_; }

  // Descending exponents, "q^-2" style, unit coefficients elided: e.g.
  // "2q^4 + 2q^2 + 3 + 2q^-2 + 2q^-4". Zero renders as "0".
  std::string str() const;

  void add(int exponent, long long coeff);

 private:
  std::map<int, long long> c_;
};

// dim S^G(i, j) for all i + j <= bound.
struct BiDimTable {
  int bound = -1;
  std::map<std::pair<int, int>, long long> dims;

  long long at(int i, int j) const;
  long long degree_dim(int n) const;
};

BiDimTable bidim_table(const Action& a, int bound);

// chi_n from the table; throws when n exceeds the table bound.
LaurentQ sl2_character(const BiDimTable& table, int n);

// Multiplicity of the trivial representation, [q^0] - [q^2]. Throws
// std::invalid_argument when negative, which means the input was not the
// character of a genuine representation.
long long trivial_multiplicity(const LaurentQ& chi);

// Character of the degree-(2k+2) part of the image of the bracket pairing:
// sum_{i=0}^{k+1} chi_{2k+2-i} * chi_i. When its trivial multiplicity is
// zero, no Casimir power D^k of degree 2k can lie in {S^G, S^G}.
LaurentQ pairing_character(const BiDimTable& table, int k);
bool obstruction_holds(const BiDimTable& table, int k);

// Polynomial in two commuting variables with rational coefficients, used for
// closed-form Poincare-Hilbert data. Key = (exponent of first variable,
// exponent of second variable).
class Series2 {
 public:
  Series2() = default;
  static Series2 one();
  static Series2 term(int i, int j, const Rat& c);

  const std::map<std::pair<int, int>, Rat>& coeffs() const { return c_; }
  Rat at(int i, int j) const;
  bool is_zero() const { return c_.empty(); }

  Series2 operator+(const Series2& o) const;
  Series2 operator-(const Series2& o) const;
  Series2 operator*(const Series2& o) const;

  bool operator==(const Series2& o) const { return c_ == o.c_; }

  void add(int i, int j, const Rat& c);

 private:
  std::map<std::pair<int, int>, Rat> c_;
};

// Power-series expansion of numer/denom up to total degree bound. The
// denominator must have a nonzero constant term; every expanded coefficient
// must be a nonnegative integer (these are dimensions).
BiDimTable expand_rational(const Series2& numer, const Series2& denom,
                           int bound);

// Expansion of numer/denom as a series in the first variable (h) whose
// coefficients are Laurent polynomials in the second (q). The h^0 part of
// the denominator must be a single monomial c*q^e. Coefficients of
// h^0..h^bound are returned; a fractional coefficient throws.
std::vector<LaurentQ> expand_char_series(const Series2& numer,
                                         const Series2& denom, int bound);

}  // namespace poishom

// Multivariate polynomials with exact rational coefficients.
//
// Terms live in a std::map under a fixed graded lexicographic order, so
// iteration order, equality, and printing are all canonical. Variable sets
// are shared immutable objects; mixing polynomials over different variable
// sets is an error.
#pragma once

#include "poishom/rat.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace poishom {

// Ordered variable list, optionally partitioned into (x, y) pairs for rings
// carrying a symplectic bigrading. pairs empty = plain ring, no bigrading.
struct VarSet {
  std::vector<std::string> names;
  // pairs[k] = (index of x_k, index of y_k).
  std::vector<std::pair<int, int>> pairs;
  // side[i] = 0 for an x variable, 1 for a y variable; empty for plain rings.
  std::vector<int> side;

  int size() const { return static_cast<int>(names.size()); }
  bool bigraded() const { return !pairs.empty(); }
  int index_of(const std::string& name) const;  // throws when absent

  // n pairs interleaved as x1, y1, x2, y2, ...
  static std::shared_ptr<const VarSet> standard(int npairs,
                                                const std::string& xbase = "x",
                                                const std::string& ybase = "y");
  // Explicit interleaved names a1, b1, a2, b2, ... with the given bases.
  static std::shared_ptr<const VarSet> plain(
      const std::vector<std::string>& names);
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// Exponent vector. Total degree is capped at 64; operations that would
// exceed the cap throw std::overflow_error.
struct Monomial {
  std::vector<uint8_t> e;

  int degree() const;
  bool operator==(const Monomial& o) const { return e == o.e; }
};

inline constexpr int kMaxDegree = 64;

// Graded lexicographic order: lower total degree first, then lexicographic
// comparison of exponent vectors. The map's largest element is therefore the
// leading term in the usual sense (degree first, x1-dominant within it).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct BiDegree {
  int xdeg = 0;
  int ydeg = 0;
  auto operator<=>(const BiDegree&) const = default;
};

class Poly {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexLess>;

  Poly() = default;
  explicit Poly(VarSetPtr vars) : vars_(std::move(vars)) {}

  static Poly zero(VarSetPtr vars) { return Poly(std::move(vars)); }
  static Poly constant(VarSetPtr vars, const Rat& c);
  static Poly variable(VarSetPtr vars, int index);
  static Poly term(VarSetPtr vars, Monomial m, const Rat& c);

  const VarSetPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  // Total degree of the highest term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  // Coefficient of m; zero when the monomial is absent.
  Rat coefficient(const Monomial& m) const;
  // The constant term.
  Rat constant_term() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& c) const;
  Poly pow(int k) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Homogeneous component of total degree d.
  Poly component(int d) const;
  // Bihomogeneous component (bigraded variable sets only).
  Poly component(BiDegree bd) const;

  // x/y bidegree of a term (bigraded variable sets only).
  BiDegree bidegree(const Monomial& m) const;
  // Bidegree shared by all terms; std::nullopt when zero or mixed.
  std::optional<BiDegree> bidegree() const;

  // Canonical rendering: terms from the leading one down, "^" powers,
  // coefficients as num/den, "1" elided on non-constant terms.
  std::string str() const;

  void add_term(const Monomial& m, const Rat& c);

 private:
  VarSetPtr vars_;
  TermMap terms_;
};

Poly partial(const Poly& f, int var_index);

// Substitutes v_i -> sum_j M[i][j] v_j. M is size() x size().
Poly linear_substitute(const Poly& f, const RatMatrix& M);

// All degree-d monomials over vars, in ascending canonical order.
std::vector<Monomial> monomial_basis(const VarSetPtr& vars, int d);
// Monomials of the given bidegree (bigraded variable sets only).
std::vector<Monomial> monomial_basis(const VarSetPtr& vars, BiDegree bd);

// Index lookup for vectorization against a fixed monomial list.
class MonomialIndex {
 public:
  explicit MonomialIndex(const std::vector<Monomial>& basis);
  int size() const { return static_cast<int>(size_); }
  // Throws std::invalid_argument when the monomial is not in the basis.
  int at(const Monomial& m) const;

 private:
  std::map<Monomial, int, GrlexLess> index_;
  size_t size_;
};

// Coefficient row of f against the basis; throws when f has support outside
// the basis.
SparseRow vectorize(const Poly& f, const MonomialIndex& index);
Poly from_row(const VarSetPtr& vars, const SparseRow& row,
              const std::vector<Monomial>& basis);

}  // namespace poishom

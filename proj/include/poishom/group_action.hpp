// Finite group actions on the polynomial ring, in two flavors.
//
// MatrixAction: generators are exact rational matrices acting on variables by
// v_i -> sum_j M[i][j] v_j; the group is closed by breadth-first products.
//
// DiagonalAction: a subgroup of (Z/m)^n acting by characters on symplectic
// pairs, x_i -> zeta^{w_i} x_i and y_i -> zeta^{-w_i} y_i. Monomial
// invariance is the congruence <w, alpha - beta> = 0 (mod m) for every
// subgroup generator w, so no root of unity is ever materialized.
//
// Invariant bases are canonical: reduced echelon representatives over the
// monomial basis of each (bi)degree, memoized per action object.
#pragma once

#include "poishom/poisson.hpp"

#include <map>
#include <variant>

namespace poishom {

struct ConjClass {
  int representative;  // index into elements()
  int size;
  int fixed_space_dim;  // dim ker(g - id)
};

class MatrixAction {
 public:
  MatrixAction(VarSetPtr vars, std::vector<RatMatrix> generators,
               int closure_cap = 100000);

  const VarSetPtr& vars() const { return vars_; }
  const std::vector<RatMatrix>& generators() const { return generators_; }

  // Group elements, identity first, breadth-first generation order.
  // Throws std::runtime_error when the closure exceeds the cap.
  const std::vector<RatMatrix>& elements() const;
  int order() const { return static_cast<int>(elements().size()); }

  // True iff every generator maps x variables to x variables and y variables
  // to y variables, i.e. the action respects the bigrading.
  bool preserves_sides() const;

  const std::vector<Poly>& invariant_basis(int d) const;
  const std::vector<Poly>& invariant_basis(BiDegree bd) const;
  int invariant_dim(int d) const;
  int invariant_dim(BiDegree bd) const;

  std::vector<ConjClass> conjugacy_classes() const;

 private:
  VarSetPtr vars_;
  std::vector<RatMatrix> generators_;
  int closure_cap_;
  mutable std::vector<RatMatrix> elements_;
  mutable std::optional<bool> preserves_sides_;
  mutable std::map<int, std::vector<Poly>> basis_by_degree_;
  mutable std::map<BiDegree, std::vector<Poly>> basis_by_bidegree_;
};

class DiagonalAction {
 public:
  DiagonalAction(VarSetPtr vars, int modulus,
                 std::vector<std::vector<int>> subgroup_generators);

  const VarSetPtr& vars() const { return vars_; }
  int modulus() const { return modulus_; }
  int pairs() const { return static_cast<int>(vars_->pairs.size()); }
  const std::vector<std::vector<int>>& subgroup_generators() const {
    return generators_;
  }

  // Subgroup elements of (Z/m)^n in ascending lexicographic order.
  const std::vector<std::vector<int>>& elements() const;
  int order() const { return static_cast<int>(elements().size()); }

  bool invariant(const Monomial& m) const;

  // Invariant monomials as single-term polynomials, canonical order.
  const std::vector<Poly>& invariant_basis(int d) const;
  const std::vector<Poly>& invariant_basis(BiDegree bd) const;
  int invariant_dim(int d) const;
  int invariant_dim(BiDegree bd) const;

  // Torus weight alpha - beta of a monomial, an exact integer vector.
  std::vector<int> weight(const Monomial& m) const;

  // Abelian group: every class is a singleton.
  std::vector<ConjClass> conjugacy_classes() const;

 private:
  VarSetPtr vars_;
  int modulus_;
  std::vector<std::vector<int>> generators_;
  mutable std::vector<std::vector<int>> elements_;
  mutable std::map<int, std::vector<Poly>> basis_by_degree_;
  mutable std::map<BiDegree, std::vector<Poly>> basis_by_bidegree_;
};

using Action = std::variant<MatrixAction, DiagonalAction>;

const VarSetPtr& action_vars(const Action& a);
int group_order(const Action& a);
const std::vector<Poly>& invariant_basis(const Action& a, int d);
const std::vector<Poly>& invariant_basis(const Action& a, BiDegree bd);
int invariant_dim(const Action& a, int d);
int invariant_dim(const Action& a, BiDegree bd);
std::vector<ConjClass> conjugacy_classes(const Action& a);

// Number of conjugacy classes with no nonzero fixed vector. This equals the
// dimension of the degree-zero Hochschild homology of the smash product.
int fixed_point_free_class_count(const Action& a);

// True iff every generator's substitution is a Poisson automorphism, i.e.
// M P M^T = P. Diagonal actions always qualify for the standard structure.
bool preserves_structure(const MatrixAction& a, const PoissonStructure& ps);

}  // namespace poishom

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "poishom/case_spec.hpp"

namespace poishom {

// The three rank-2 invariant rings with published presentations.
enum class RingId { A2, B2, G2 };

std::string ring_name(RingId ring);
RingId ring_from_name(const std::string& name);

// Fundamental invariants of one ring: a formal plain variable per generator
// (for writing relation statements) plus the concrete polynomials in the
// case's symplectic coordinates. The concrete polynomials live over
// spec.vars, so they combine directly with spec.structure.
struct GeneratorSystem {
  RingId ring;
  CaseSpec spec;
  VarSetPtr formal;  // plain variables, one per generator, in names order
  std::vector<std::string> names;
  std::vector<Poly> concrete;

  int index_of(const std::string& name) const;
  const Poly& by_name(const std::string& name) const;
};

GeneratorSystem generator_system(RingId ring);

// Substitutes the concrete generators into a polynomial over the formal
// variables.
Poly eval_formal(const Poly& formal_poly, const GeneratorSystem& sys);

// One published relation: lhs = rhs in the invariant ring, both sides
// written over the formal generators. corrected_rhs is present where the
// printed right-hand side fails exact verification.
struct Relation {
  std::string id;
  Poly lhs;
  Poly printed_rhs;
  std::optional<Poly> corrected_rhs;
};

std::vector<Relation> ring_relations(RingId ring);

struct RelationCheck {
  std::string id;
  bool printed_holds = false;
  bool corrected_holds = false;  // equals printed_holds when no correction
  bool has_correction = false;
  Poly printed_residual;
  Poly corrected_residual;
};

// Evaluates every relation of the ring concretely; exact residuals.
std::vector<RelationCheck> verify_relations(RingId ring);

// The full 7x7 closure table of the degree-<=3 generators: entry (i, j) is
// {gen_i, gen_j} rewritten in the generators. Index order matches
// closure_table_names().
using FormalTable = std::array<std::array<Poly, 7>, 7>;

const std::vector<std::string>& closure_table_names();
FormalTable closure_table();

struct TableCheck {
  std::string row, col;
  bool holds = false;
  Poly residual;
};

// Evaluates every closure table entry against the concrete bracket.
std::vector<TableCheck> verify_closure_table();

struct JacobiCheck {
  std::string a, b, c;
  bool holds = false;
  Poly jacobiator;
};

// Jacobi identity for the abstract biderivation defined by a closure table,
// over all generator triples. A table that is not a Poisson structure on
// the free polynomial ring fails here.
std::vector<JacobiCheck> jacobi_scan(const FormalTable& table);
std::vector<JacobiCheck> jacobi_scan();  // built-in table

struct CellCheck {
  BiDegree cell;
  int invariant_dim = 0;
  int product_count = 0;  // base-ring monomial times module-basis products
  int rank = 0;
  bool holds = false;  // product_count == rank == invariant_dim
};

struct ModuleBasisReport {
  bool ok = false;
  std::vector<CellCheck> cells;
  std::vector<CellCheck> failures;
};

// Checks the free-module decomposition of the ring over its base polynomial
// subring: in every bigraded cell up to the bound, the products of base
// monomials with module-basis elements must be a basis of the invariants.
ModuleBasisReport verify_module_basis(RingId ring, int bound);
// Same with an explicit module basis, for probing degenerate variants.
ModuleBasisReport verify_module_basis(RingId ring, int bound,
                                      const std::vector<Poly>& module_basis);

struct GenerationReport {
  bool ok = false;
  int first_failing_degree = -1;
  // degree, invariant dimension, rank of generated products
  std::vector<std::array<int, 3>> per_degree;
};

// Checks that products of the given invariants span the invariant ring
// degree by degree up to the bound.
GenerationReport verify_generation(const CaseSpec& spec,
                                   const std::vector<Poly>& generators,
                                   int bound);

}  // namespace poishom

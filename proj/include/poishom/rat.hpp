// Exact rational scalars and sparse rational linear algebra.
//
// Everything here is exact: no floating point, no rounding. Rank and span
// membership are the primitives every quotient-dimension computation in the
// library reduces to.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace poishom {

// Arbitrary-precision rational, kept in lowest terms with positive
// denominator. Build ratios through rat_of, which canonicalizes; the
// two-argument mpq_class constructor alone does not.
using Rat = mpq_class;

Rat rat_of(long num, long den = 1);

// Parses "num" or "num/den" with optional sign; throws std::invalid_argument
// on malformed input or zero denominator.
Rat rat_parse(const std::string& text);

// Canonical rendering: "num" when den = 1, else "num/den".
std::string rat_str(const Rat& r);

// Sparse row: (column, value) pairs with strictly increasing columns and no
// stored zeros.
using SparseRow = std::vector<std::pair<int, Rat>>;

SparseRow row_from_dense(const std::vector<Rat>& v);
std::vector<Rat> row_to_dense(const SparseRow& r, int cols);

// a + c*b, sparse merge; drops cancellations.
SparseRow row_axpy(const SparseRow& a, const Rat& c, const SparseRow& b);

// Sparse rational matrix. Entries default to zero; no explicit zeros stored.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols);

  static RatMatrix identity(int n);
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Rat& v);
  Rat at(int r, int c) const;
  const SparseRow& row(int r) const { return data_[r]; }

  RatMatrix transpose() const;
  RatMatrix mul(const RatMatrix& other) const;
  RatMatrix add_scaled(const RatMatrix& other, const Rat& c) const;

  // Exact inverse; std::nullopt when singular. Square matrices only.
  std::optional<RatMatrix> inverse() const;

  bool operator==(const RatMatrix& other) const;
  bool operator!=(const RatMatrix& other) const { return !(*this == other); }

  // Total order usable as a map key (rows, cols, then entry lists).
  bool operator<(const RatMatrix& other) const;

 private:
  int rows_, cols_;
  std::vector<SparseRow> data_;
};

// Exact rank over the rationals. Deterministic pivot rule: smallest leading
// column first, ties broken by smallest row index.
int rank(const RatMatrix& m);
int rank(std::vector<SparseRow> rows);

// True iff v lies in the rational span of basis. All rows must have columns
// < cols; throws std::invalid_argument on a column out of range.
bool in_span(const SparseRow& v, const std::vector<SparseRow>& basis, int cols);

// Incremental row-echelon accumulator: add rows one at a time, query rank and
// membership at any point. Pivot rows are kept normalized (leading 1) and
// fully reduced against each other, so the stored basis is the reduced
// echelon form of the row span (canonical given the insertion order).
class RowSpace {
 public:
  explicit RowSpace(int cols) : cols_(cols) {}

  // Returns true iff the row enlarged the span.
  bool add(SparseRow r);
  bool contains(SparseRow r) const;
  int rank() const { return static_cast<int>(pivots_.size()); }
  int cols() const { return cols_; }

  // Pivot rows in increasing leading-column order (reduced echelon basis).
  std::vector<SparseRow> echelon_basis() const;

 private:
  // Reduces r against the stored pivots; the result is zero or has a leading
  // column no pivot owns.
  void reduce(SparseRow& r) const;

  int cols_;
  std::vector<SparseRow> pivots_;
  std::map<int, int> pivot_by_col_;
};

// Canonical kernel basis of m (right null space): reduced echelon form, one
// vector per free column in increasing column order, free coordinate 1.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

// Exact solution of A x = b; std::nullopt when inconsistent. When the system
// is underdetermined returns the solution with all free variables zero.
std::optional<std::vector<Rat>> solve(const RatMatrix& A,
                                      const std::vector<Rat>& b);

}  // namespace poishom

#include "poishom/rat.hpp"

#include <algorithm>
#include <stdexcept>

namespace poishom {

Rat rat_of(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat_of: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rat_parse: empty string");
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("rat_parse: malformed rational '" + text + "'");
  // mpq_set_str rejects an explicit plus sign.
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Rat d(den);
  if (d == 0)
    throw std::invalid_argument("rat_parse: zero denominator in '" + text + "'");
  Rat r = Rat(num) / d;
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

SparseRow row_from_dense(const std::vector<Rat>& v) {
  SparseRow r;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) r.emplace_back(i, v[i]);
  return r;
}

std::vector<Rat> row_to_dense(const SparseRow& r, int cols) {
  std::vector<Rat> v(cols, Rat(0));
  for (const auto& [c, x] : r) {
    if (c < 0 || c >= cols)
      throw std::invalid_argument("row_to_dense: column out of range");
    v[c] = x;
  }
  return v;
}

SparseRow row_axpy(const SparseRow& a, const Rat& c, const SparseRow& b) {
  if (c == 0) return a;
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Rat v = a[i].second + c * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("RatMatrix: negative dimension");
  data_.resize(rows);
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rat(1));
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
  RatMatrix m(nr, nc);
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(rows[i].size()) != nc)
      throw std::invalid_argument("RatMatrix::from_rows: ragged rows");
    m.data_[i] = row_from_dense(rows[i]);
  }
  return m;
}

void RatMatrix::set(int r, int c, const Rat& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::invalid_argument("RatMatrix::set: index out of range");
  SparseRow& row = data_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const std::pair<int, Rat>& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v == 0)
      row.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    row.insert(it, {c, v});
  }
}

Rat RatMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::invalid_argument("RatMatrix::at: index out of range");
  const SparseRow& row = data_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const std::pair<int, Rat>& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rat(0);
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  return t;
}

RatMatrix RatMatrix::mul(const RatMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("RatMatrix::mul: dimension mismatch");
  RatMatrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r) {
    SparseRow acc;
    for (const auto& [k, v] : data_[r]) acc = row_axpy(acc, v, other.data_[k]);
    out.data_[r] = std::move(acc);
  }
  return out;
}

RatMatrix RatMatrix::add_scaled(const RatMatrix& other, const Rat& c) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("RatMatrix::add_scaled: dimension mismatch");
  RatMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    out.data_[r] = row_axpy(data_[r], c, other.data_[r]);
  return out;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (rows_ != cols_)
    throw std::invalid_argument("RatMatrix::inverse: not square");
  int n = rows_;
  // Gauss-Jordan on [A | I] with the library's pivot rule.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int r = 0; r < n; ++r)
    for (const auto& [c, v] : data_[r]) a[r][c] = v;
  for (int r = 0; r < n; ++r) a[r][n + r] = 1;
  int piv_row = 0;
  for (int c = 0; c < n && piv_row < n; ++c) {
    int sel = -1;
    for (int r = piv_row; r < n; ++r)
      if (a[r][c] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) return std::nullopt;
    std::swap(a[piv_row], a[sel]);
    Rat inv = 1 / a[piv_row][c];
    for (int j = c; j < 2 * n; ++j) a[piv_row][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == piv_row || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (int j = c; j < 2 * n; ++j) a[r][j] -= f * a[piv_row][j];
    }
    ++piv_row;
  }
  if (piv_row < n) return std::nullopt;
  RatMatrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (a[r][n + c] != 0) out.set(r, c, a[r][n + c]);
  return out;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool RatMatrix::operator<(const RatMatrix& other) const {
  if (rows_ != other.rows_) return rows_ < other.rows_;
  if (cols_ != other.cols_) return cols_ < other.cols_;
  return data_ < other.data_;
}

namespace {

int leading_col(const SparseRow& r) { return r.empty() ? -1 : r.front().first; }

}  // namespace

int rank(std::vector<SparseRow> rows) {
  int rk = 0;
  std::vector<bool> used(rows.size(), false);
  for (;;) {
    // Pivot rule: smallest leading column, then smallest row index.
    int best = -1;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (used[i] || rows[i].empty()) continue;
      if (best < 0 || leading_col(rows[i]) < leading_col(rows[best])) best = i;
    }
    if (best < 0) break;
    used[best] = true;
    ++rk;
    int pc = leading_col(rows[best]);
    Rat pv = rows[best].front().second;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (used[i] || rows[i].empty()) continue;
      if (leading_col(rows[i]) == pc)
        rows[i] = row_axpy(rows[i], -rows[i].front().second / pv, rows[best]);
    }
  }
  return rk;
}

int rank(const RatMatrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rank(std::move(rows));
}

bool in_span(const SparseRow& v, const std::vector<SparseRow>& basis,
             int cols) {
  RowSpace space(cols);
  for (const auto& b : basis) space.add(b);
  return space.contains(v);
}

void RowSpace::reduce(SparseRow& r) const {
  for (;;) {
    if (r.empty()) return;
    auto it = pivot_by_col_.find(r.front().first);
    if (it == pivot_by_col_.end()) return;
    r = row_axpy(r, -r.front().second, pivots_[it->second]);
  }
}

bool RowSpace::add(SparseRow r) {
  for (const auto& [c, v] : r) {
    (void)v;
    if (c < 0 || c >= cols_)
      throw std::invalid_argument("RowSpace::add: column out of range");
  }
  reduce(r);
  if (r.empty()) return false;
  // Normalize the new pivot and back-substitute into the existing ones so the
  // stored basis stays in reduced echelon form.
  Rat inv = 1 / r.front().second;
  for (auto& [c, v] : r) {
    (void)c;
    v *= inv;
  }
  int pc = r.front().first;
  for (auto& p : pivots_) {
    auto it = std::lower_bound(
        p.begin(), p.end(), pc,
        [](const std::pair<int, Rat>& e, int col) { return e.first < col; });
    if (it != p.end() && it->first == pc) {
      Rat f = it->second;
      p = row_axpy(p, -f, r);
    }
  }
  pivot_by_col_[pc] = static_cast<int>(pivots_.size());
  pivots_.push_back(std::move(r));
  return true;
}

bool RowSpace::contains(SparseRow r) const {
  for (const auto& [c, v] : r) {
    (void)v;
    if (c < 0 || c >= cols_)
      throw std::invalid_argument("RowSpace::contains: column out of range");
  }
  reduce(r);
  return r.empty();
}

std::vector<SparseRow> RowSpace::echelon_basis() const {
  std::vector<SparseRow> out;
  out.reserve(pivots_.size());
  for (const auto& [col, idx] : pivot_by_col_) {
    (void)col;
    out.push_back(pivots_[idx]);
  }
  return out;
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
  RowSpace space(m.cols());
  for (int r = 0; r < m.rows(); ++r) space.add(m.row(r));
  std::vector<SparseRow> ech = space.echelon_basis();
  std::vector<bool> is_pivot(m.cols(), false);
  std::vector<int> pivot_col(ech.size());
  for (size_t i = 0; i < ech.size(); ++i) {
    pivot_col[i] = ech[i].front().first;
    is_pivot[pivot_col[i]] = true;
  }
  std::vector<std::vector<Rat>> kernel;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[f] = 1;
    for (size_t i = 0; i < ech.size(); ++i) {
      // Echelon row: x_{pivot} + sum over later columns; solve for x_{pivot}.
      for (const auto& [c, val] : ech[i])
        if (c == f) v[pivot_col[i]] = -val;
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& A,
                                      const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != A.rows())
    throw std::invalid_argument("solve: right-hand side length mismatch");
  // Row-reduce the augmented system; the extra column never pivots.
  RowSpace space(A.cols() + 1);
  for (int r = 0; r < A.rows(); ++r) {
    SparseRow row = A.row(r);
    if (b[r] != 0) row.emplace_back(A.cols(), b[r]);
    space.add(std::move(row));
  }
  std::vector<Rat> x(A.cols(), Rat(0));
  for (const auto& row : space.echelon_basis()) {
    if (row.front().first == A.cols()) return std::nullopt;  // 0 = nonzero
    // Free variables are zero, so the pivot value is the augmented entry.
    Rat val(0);
    if (row.back().first == A.cols()) val = row.back().second;
    x[row.front().first] = val;
  }
  return x;
}

}  // namespace poishom

#include "poishom/group_action.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace poishom {

MatrixAction::MatrixAction(VarSetPtr vars, std::vector<RatMatrix> generators,
                           int closure_cap)
    : vars_(std::move(vars)),
      generators_(std::move(generators)),
      closure_cap_(closure_cap) {
  for (const auto& g : generators_)
    if (g.rows() != vars_->size() || g.cols() != vars_->size())
      throw std::invalid_argument("MatrixAction: generator size mismatch");
}

const std::vector<RatMatrix>& MatrixAction::elements() const {
  if (!elements_.empty()) return elements_;
  RatMatrix id = RatMatrix::identity(vars_->size());
  std::map<RatMatrix, int> seen;
  std::vector<RatMatrix> worklist{id};
  seen.emplace(id, 0);
  for (size_t head = 0; head < worklist.size(); ++head) {
    RatMatrix cur = worklist[head];
    for (const auto& g : generators_) {
      RatMatrix next = cur.mul(g);
      if (seen.emplace(next, static_cast<int>(worklist.size())).second) {
        worklist.push_back(std::move(next));
        if (static_cast<int>(worklist.size()) > closure_cap_)
          throw std::runtime_error("MatrixAction: group closure exceeds cap");
      }
    }
  }
  elements_ = std::move(worklist);
  return elements_;
}

bool MatrixAction::preserves_sides() const {
  if (preserves_sides_) return *preserves_sides_;
  bool ok = vars_->bigraded();
  for (const auto& g : generators_) {
    if (!ok) break;
    for (int i = 0; i < g.rows() && ok; ++i)
      for (const auto& [j, v] : g.row(i)) {
        (void)v;
        if (vars_->side[i] != vars_->side[j]) {
          ok = false;
          break;
        }
      }
  }
  preserves_sides_ = ok;
  return ok;
}

namespace {

// Canonical invariant basis of the span of the given averaged polynomials:
// reduced echelon rows over the cell's monomial basis, converted back.
std::vector<Poly> echelon_polys(const VarSetPtr& vars,
                                const std::vector<Poly>& averaged,
                                const std::vector<Monomial>& cell) {
  MonomialIndex index(cell);
  RowSpace space(index.size());
  for (const auto& p : averaged)
    if (!p.is_zero()) space.add(vectorize(p, index));
  std::vector<Poly> out;
  for (const auto& row : space.echelon_basis())
    out.push_back(from_row(vars, row, cell));
  return out;
}

std::vector<Poly> reynolds_basis(const MatrixAction& a,
                                 const std::vector<Monomial>& cell) {
  const auto& els = a.elements();
  Rat inv_order(1, static_cast<long>(els.size()));
  std::vector<Poly> averaged;
  for (const auto& m : cell) {
    Poly mono = Poly::term(a.vars(), m, Rat(1));
    Poly avg(a.vars());
    for (const auto& g : els) avg += linear_substitute(mono, g);
    averaged.push_back(avg.scaled(inv_order));
  }
  return echelon_polys(a.vars(), averaged, cell);
}

}  // namespace

const std::vector<Poly>& MatrixAction::invariant_basis(int d) const {
  auto it = basis_by_degree_.find(d);
  if (it != basis_by_degree_.end()) return it->second;
  std::vector<Poly> basis;
  if (preserves_sides()) {
    // The bigrading is respected, so the degree-d space splits into cells.
    for (int i = 0; i <= d; ++i) {
      const auto& cell = invariant_basis(BiDegree{i, d - i});
      basis.insert(basis.end(), cell.begin(), cell.end());
    }
  } else {
    basis = reynolds_basis(*this, monomial_basis(vars_, d));
  }
  return basis_by_degree_.emplace(d, std::move(basis)).first->second;
}

const std::vector<Poly>& MatrixAction::invariant_basis(BiDegree bd) const {
  auto it = basis_by_bidegree_.find(bd);
  if (it != basis_by_bidegree_.end()) return it->second;
  if (!preserves_sides())
    throw std::invalid_argument(
        "MatrixAction: bidegree basis needs a side-preserving action");
  std::vector<Poly> basis = reynolds_basis(*this, monomial_basis(vars_, bd));
  return basis_by_bidegree_.emplace(bd, std::move(basis)).first->second;
}

int MatrixAction::invariant_dim(int d) const {
  return static_cast<int>(invariant_basis(d).size());
}

int MatrixAction::invariant_dim(BiDegree bd) const {
  return static_cast<int>(invariant_basis(bd).size());
}

std::vector<ConjClass> MatrixAction::conjugacy_classes() const {
  const auto& els = elements();
  int n = static_cast<int>(els.size());
  std::map<RatMatrix, int> index;
  for (int i = 0; i < n; ++i) index.emplace(els[i], i);
  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (els[i].mul(els[j]) == els[0]) {
        inverse[i] = j;
        break;
      }
  std::vector<bool> marked(n, false);
  std::vector<ConjClass> classes;
  for (int i = 0; i < n; ++i) {
    if (marked[i]) continue;
    std::set<int> orbit;
    for (int g = 0; g < n; ++g)
      orbit.insert(index.at(els[g].mul(els[i]).mul(els[inverse[g]])));
    for (int e : orbit) marked[e] = true;
    RatMatrix shifted =
        els[i].add_scaled(RatMatrix::identity(vars_->size()), Rat(-1));
    classes.push_back(ConjClass{i, static_cast<int>(orbit.size()),
                                vars_->size() - rank(shifted)});
  }
  return classes;
}

DiagonalAction::DiagonalAction(VarSetPtr vars, int modulus,
                               std::vector<std::vector<int>> subgroup_generators)
    : vars_(std::move(vars)), modulus_(modulus) {
  if (modulus_ < 1) throw std::invalid_argument("DiagonalAction: modulus < 1");
  if (!vars_->bigraded())
    throw std::invalid_argument("DiagonalAction: variable set has no pairs");
  int n = pairs();
  for (auto& w : subgroup_generators) {
    if (static_cast<int>(w.size()) != n)
      throw std::invalid_argument("DiagonalAction: weight length mismatch");
    for (int& c : w) c = ((c % modulus_) + modulus_) % modulus_;
  }
  generators_ = std::move(subgroup_generators);
}

const std::vector<std::vector<int>>& DiagonalAction::elements() const {
  if (!elements_.empty()) return elements_;
  int n = pairs();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> worklist{std::vector<int>(n, 0)};
  seen.insert(worklist[0]);
  for (size_t head = 0; head < worklist.size(); ++head) {
    std::vector<int> cur = worklist[head];
    for (const auto& g : generators_) {
      std::vector<int> next(n);
      for (int i = 0; i < n; ++i) next[i] = (cur[i] + g[i]) % modulus_;
      if (seen.insert(next).second) worklist.push_back(std::move(next));
    }
  }
  elements_.assign(seen.begin(), seen.end());
  return elements_;
}

bool DiagonalAction::invariant(const Monomial& m) const {
  int n = pairs();
  for (const auto& w : generators_) {
    long s = 0;
    for (int k = 0; k < n; ++k) {
      auto [xi, yi] = vars_->pairs[k];
      s += static_cast<long>(w[k]) * (m.e[xi] - m.e[yi]);
    }
    if (((s % modulus_) + modulus_) % modulus_ != 0) return false;
  }
  return true;
}

std::vector<int> DiagonalAction::weight(const Monomial& m) const {
  int n = pairs();
  std::vector<int> w(n);
  for (int k = 0; k < n; ++k) {
    auto [xi, yi] = vars_->pairs[k];
    w[k] = m.e[xi] - m.e[yi];
  }
  return w;
}

namespace {

std::vector<Poly> filter_invariant(const DiagonalAction& a,
                                   const std::vector<Monomial>& cell) {
  std::vector<Poly> out;
  for (const auto& m : cell)
    if (a.invariant(m)) out.push_back(Poly::term(a.vars(), m, Rat(1)));
  return out;
}

}  // namespace

const std::vector<Poly>& DiagonalAction::invariant_basis(int d) const {
  auto it = basis_by_degree_.find(d);
  if (it != basis_by_degree_.end()) return it->second;
  std::vector<Poly> basis = filter_invariant(*this, monomial_basis(vars_, d));
  return basis_by_degree_.emplace(d, std::move(basis)).first->second;
}

const std::vector<Poly>& DiagonalAction::invariant_basis(BiDegree bd) const {
  auto it = basis_by_bidegree_.find(bd);
  if (it != basis_by_bidegree_.end()) return it->second;
  std::vector<Poly> basis = filter_invariant(*this, monomial_basis(vars_, bd));
  return basis_by_bidegree_.emplace(bd, std::move(basis)).first->second;
}

int DiagonalAction::invariant_dim(int d) const {
  return static_cast<int>(invariant_basis(d).size());
}

int DiagonalAction::invariant_dim(BiDegree bd) const {
  return static_cast<int>(invariant_basis(bd).size());
}

std::vector<ConjClass> DiagonalAction::conjugacy_classes() const {
  const auto& els = elements();
  std::vector<ConjClass> classes;
  for (int i = 0; i < static_cast<int>(els.size()); ++i) {
    // zeta^{w_k} = 1 exactly when w_k = 0 (mod m); each zero weight
    // contributes the fixed plane of its pair.
    int zero_weights = 0;
    for (int c : els[i])
      if (c == 0) ++zero_weights;
    classes.push_back(ConjClass{i, 1, 2 * zero_weights});
  }
  return classes;
}

const VarSetPtr& action_vars(const Action& a) {
  return std::visit([](const auto& x) -> const VarSetPtr& { return x.vars(); },
                    a);
}

int group_order(const Action& a) {
  return std::visit([](const auto& x) { return x.order(); }, a);
}

const std::vector<Poly>& invariant_basis(const Action& a, int d) {
  return std::visit(
      [&](const auto& x) -> const std::vector<Poly>& {
        return x.invariant_basis(d);
      },
      a);
}

const std::vector<Poly>& invariant_basis(const Action& a, BiDegree bd) {
  return std::visit(
      [&](const auto& x) -> const std::vector<Poly>& {
        return x.invariant_basis(bd);
      },
      a);
}

int invariant_dim(const Action& a, int d) {
  return std::visit([&](const auto& x) { return x.invariant_dim(d); }, a);
}

int invariant_dim(const Action& a, BiDegree bd) {
  return std::visit([&](const auto& x) { return x.invariant_dim(bd); }, a);
}

std::vector<ConjClass> conjugacy_classes(const Action& a) {
  return std::visit([](const auto& x) { return x.conjugacy_classes(); }, a);
}

int fixed_point_free_class_count(const Action& a) {
  int count = 0;
  for (const auto& c : conjugacy_classes(a))
    if (c.fixed_space_dim == 0) ++count;
  return count;
}

bool preserves_structure(const MatrixAction& a, const PoissonStructure& ps) {
  for (const auto& g : a.generators())
    if (g.mul(ps.P).mul(g.transpose()) != ps.P) return false;
  return true;
}

}  // namespace poishom

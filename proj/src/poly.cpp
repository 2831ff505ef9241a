#include "poishom/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace poishom {

int VarSet::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  throw std::invalid_argument("VarSet: unknown variable '" + name + "'");
}

std::shared_ptr<const VarSet> VarSet::standard(int npairs,
                                               const std::string& xbase,
                                               const std::string& ybase) {
  auto vs = std::make_shared<VarSet>();
  for (int k = 1; k <= npairs; ++k) {
    vs->names.push_back(xbase + std::to_string(k));
    vs->names.push_back(ybase + std::to_string(k));
    vs->pairs.emplace_back(2 * (k - 1), 2 * (k - 1) + 1);
    vs->side.push_back(0);
    vs->side.push_back(1);
  }
  return vs;
}

std::shared_ptr<const VarSet> VarSet::plain(
    const std::vector<std::string>& names) {
  auto vs = std::make_shared<VarSet>();
  vs->names = names;
  return vs;
}

int Monomial::degree() const {
  int d = 0;
  for (uint8_t x : e) d += x;
  return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.e < b.e;
}

Poly Poly::constant(VarSetPtr vars, const Rat& c) {
  Poly p(vars);
  Monomial m;
  m.e.assign(vars->size(), 0);
  p.add_term(m, c);
  return p;
}

Poly Poly::variable(VarSetPtr vars, int index) {
  if (index < 0 || index >= vars->size())
    throw std::invalid_argument("Poly::variable: index out of range");
  Poly p(vars);
  Monomial m;
  m.e.assign(vars->size(), 0);
  m.e[index] = 1;
  p.add_term(m, Rat(1));
  return p;
}

Poly Poly::term(VarSetPtr vars, Monomial m, const Rat& c) {
  if (static_cast<int>(m.e.size()) != vars->size())
    throw std::invalid_argument("Poly::term: exponent length mismatch");
  Poly p(vars);
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  if (m.degree() > kMaxDegree)
    throw std::overflow_error("Poly: degree cap exceeded");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

Rat Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const {
  Monomial m;
  m.e.assign(vars_->size(), 0);
  return coefficient(m);
}

namespace {

void check_same_vars(const Poly& a, const Poly& b, const char* op) {
  if (a.vars() != b.vars())
    throw std::invalid_argument(std::string(op) +
                                ": mixed variable sets");
}

}  // namespace

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_vars(*this, o, "Poly::operator+");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_vars(*this, o, "Poly::operator-");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const { return scaled(Rat(-1)); }

Poly Poly::scaled(const Rat& c) const {
  Poly r(vars_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, c * v);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same_vars(*this, o, "Poly::operator*");
  Poly r(vars_);
  Monomial prod;
  prod.e.resize(vars_->size());
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      int d = 0;
      for (size_t i = 0; i < prod.e.size(); ++i) {
        int s = ma.e[i] + mb.e[i];
        prod.e[i] = static_cast<uint8_t>(s);
        d += s;
      }
      if (d > kMaxDegree)
        throw std::overflow_error("Poly::operator*: degree cap exceeded");
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly r = Poly::constant(vars_, Rat(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = k > 1 ? base * base : base;
    k >>= 1;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

Poly Poly::component(int d) const {
  Poly r(vars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::component(BiDegree bd) const {
  Poly r(vars_);
  for (const auto& [m, c] : terms_)
    if (bidegree(m) == bd) r.terms_.emplace(m, c);
  return r;
}

BiDegree Poly::bidegree(const Monomial& m) const {
  if (!vars_->bigraded())
    throw std::invalid_argument("Poly::bidegree: variable set not bigraded");
  BiDegree bd;
  for (int i = 0; i < vars_->size(); ++i) {
    if (vars_->side[i] == 0)
      bd.xdeg += m.e[i];
    else
      bd.ydeg += m.e[i];
  }
  return bd;
}

std::optional<BiDegree> Poly::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  BiDegree bd = bidegree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    (void)c;
    if (bidegree(m) != bd) return std::nullopt;
  }
  return bd;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading term first: iterate the canonical order downward.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = m.degree() > 0;
    if (!has_vars || a != 1) {
      out << rat_str(a);
      if (has_vars) out << "*";
    }
    bool first_var = true;
    for (int i = 0; i < vars_->size(); ++i) {
      if (m.e[i] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << vars_->names[i];
      if (m.e[i] > 1) out << "^" << static_cast<int>(m.e[i]);
    }
  }
  return out.str();
}

Poly partial(const Poly& f, int var_index) {
  if (var_index < 0 || var_index >= f.vars()->size())
    throw std::invalid_argument("partial: variable index out of range");
  Poly r(f.vars());
  for (const auto& [m, c] : f.terms()) {
    if (m.e[var_index] == 0) continue;
    Monomial d = m;
    int k = d.e[var_index];
    d.e[var_index] = static_cast<uint8_t>(k - 1);
    r.add_term(d, c * Rat(k));
  }
  return r;
}

Poly linear_substitute(const Poly& f, const RatMatrix& M) {
  int n = f.vars()->size();
  if (M.rows() != n || M.cols() != n)
    throw std::invalid_argument("linear_substitute: matrix size mismatch");
  // Images of the variables, with powers memoized across terms.
  std::vector<Poly> image(n, Poly(f.vars()));
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, v] : M.row(i))
      image[i] += Poly::variable(f.vars(), j).scaled(v);
  }
  std::vector<std::vector<Poly>> powers(n);
  auto power = [&](int i, int k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(f.vars(), Rat(1)));
    while (static_cast<int>(cache.size()) <= k)
      cache.push_back(cache.back() * image[i]);
    return cache[k];
  };
  Poly r(f.vars());
  for (const auto& [m, c] : f.terms()) {
    Poly t = Poly::constant(f.vars(), c);
    for (int i = 0; i < n; ++i)
      if (m.e[i] > 0) t = t * power(i, m.e[i]);
    r += t;
  }
  return r;
}

namespace {

void enumerate_exponents(int nvars, int remaining, size_t pos, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (pos + 1 == static_cast<size_t>(nvars)) {
    cur.e[pos] = static_cast<uint8_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    cur.e[pos] = static_cast<uint8_t>(k);
    enumerate_exponents(nvars, remaining - k, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(const VarSetPtr& vars, int d) {
  if (d < 0) return {};
  if (d > kMaxDegree)
    throw std::overflow_error("monomial_basis: degree cap exceeded");
  std::vector<Monomial> out;
  Monomial cur;
  cur.e.assign(vars->size(), 0);
  if (vars->size() == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  enumerate_exponents(vars->size(), d, 0, cur, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::vector<Monomial> monomial_basis(const VarSetPtr& vars, BiDegree bd) {
  if (!vars->bigraded())
    throw std::invalid_argument("monomial_basis: variable set not bigraded");
  if (bd.xdeg < 0 || bd.ydeg < 0) return {};
  std::vector<Monomial> all = monomial_basis(vars, bd.xdeg + bd.ydeg);
  std::vector<Monomial> out;
  for (const auto& m : all) {
    int xd = 0;
    for (int i = 0; i < vars->size(); ++i)
      if (vars->side[i] == 0) xd += m.e[i];
    if (xd == bd.xdeg) out.push_back(m);
  }
  return out;
}

MonomialIndex::MonomialIndex(const std::vector<Monomial>& basis) {
  for (size_t i = 0; i < basis.size(); ++i) {
    auto [it, inserted] = index_.emplace(basis[i], static_cast<int>(i));
    (void)it;
    if (!inserted)
      throw std::invalid_argument("MonomialIndex: duplicate monomial");
  }
  size_ = basis.size();
}

int MonomialIndex::at(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end())
    throw std::invalid_argument("MonomialIndex: monomial not in basis");
  return it->second;
}

SparseRow vectorize(const Poly& f, const MonomialIndex& index) {
  SparseRow row;
  row.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) row.emplace_back(index.at(m), c);
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

Poly from_row(const VarSetPtr& vars, const SparseRow& row,
              const std::vector<Monomial>& basis) {
  Poly p(vars);
  for (const auto& [i, c] : row) {
    if (i < 0 || i >= static_cast<int>(basis.size()))
      throw std::invalid_argument("from_row: index out of range");
    p.add_term(basis[i], c);
  }
  return p;
}

}  // namespace poishom

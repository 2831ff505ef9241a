#include "poishom/hp0.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace poishom {

namespace {

// True when the bracket matrix couples x variables only to y variables.
// Then brackets of bihomogeneous polynomials are bihomogeneous, with both
// partial degrees dropping by exactly one, and the scan can work per cell.
bool side_coupled(const PoissonStructure& ps) {
  for (const auto& [i, j, c] : ps.entries)
    if (ps.vars->side[i] == ps.vars->side[j]) return false;
  return true;
}

// One coefficient block of a fixed degree: columns are the block's
// monomials, target_dim is the dimension the bracket rows can at most fill.
struct Block {
  MonomialIndex index;
  RowSpace space;
  int target_dim;

  Block(const std::vector<Monomial>& monos, int target)
      : index(monos),
        space(static_cast<int>(monos.size())),
        target_dim(target) {}

  bool full() const { return space.rank() == target_dim; }
};

// Canonical row enumeration for a side-respecting action and side-coupled
// structure, routed by target cell. The sink receives the pair (not the
// bracket, which it computes only when it needs the row) and returns false
// to stop early.
template <class Sink>
void for_matrix_rows(const MatrixAction& act, int d, Sink&& sink) {
  for (int a = 1; 2 * a <= d + 2; ++a) {
    int b = d + 2 - a;
    for (int ax = 0; ax <= a; ++ax) {
      BiDegree c1{ax, a - ax};
      const auto& basis1 = act.invariant_basis(c1);
      if (basis1.empty()) continue;
      for (int bx = 0; bx <= b; ++bx) {
        BiDegree c2{bx, b - bx};
        if (a == b && c2 < c1) continue;  // unordered cell pairs at equal degree
        const auto& basis2 = act.invariant_basis(c2);
        if (basis2.empty()) continue;
        BiDegree target{c1.xdeg + c2.xdeg - 1, c1.ydeg + c2.ydeg - 1};
        if (target.xdeg < 0 || target.ydeg < 0) continue;  // bracket vanishes
        bool same_cell = (a == b && c1 == c2);
        for (std::size_t i = 0; i < basis1.size(); ++i) {
          for (std::size_t j = same_cell ? i + 1 : 0; j < basis2.size(); ++j) {
            if (!sink(target, basis1[i], basis2[j])) return;
          }
        }
      }
    }
  }
}

struct MonoInfo {
  const Poly* poly;
  const Monomial* mono;
  std::vector<int> weight;
  bool zero_weight;
};

std::vector<MonoInfo> diagonal_infos(const DiagonalAction& act, int degree) {
  std::vector<MonoInfo> out;
  for (const Poly& f : act.invariant_basis(degree)) {
    const Monomial& m = f.terms().begin()->first;
    auto w = act.weight(m);
    bool zero = std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
    out.push_back(MonoInfo{&f, &m, std::move(w), zero});
  }
  return out;
}

// Canonical row enumeration for a torus action, routed by target weight.
// With zero_targets_only the enumeration keeps only rows landing in the
// weight-zero block and drops pairs of weight-zero monomials, whose brackets
// vanish identically (the x_i y_i generators Poisson-commute).
template <class Sink>
void for_diagonal_rows(const DiagonalAction& act, int d, bool zero_targets_only,
                       Sink&& sink) {
  int n = act.pairs();
  for (int a = 1; 2 * a <= d + 2; ++a) {
    int b = d + 2 - a;
    auto infos_a = diagonal_infos(act, a);
    auto infos_b = (a == b) ? infos_a : diagonal_infos(act, b);
    for (std::size_t i = 0; i < infos_a.size(); ++i) {
      for (std::size_t j = (a == b) ? i + 1 : 0; j < infos_b.size(); ++j) {
        if (zero_targets_only && infos_a[i].zero_weight && infos_b[j].zero_weight)
          continue;
        std::vector<int> target(n);
        bool zero = true;
        for (int t = 0; t < n; ++t) {
          target[t] = infos_a[i].weight[t] + infos_b[j].weight[t];
          if (target[t] != 0) zero = false;
        }
        if (zero_targets_only && !zero) continue;
        if (!sink(target, *infos_a[i].poly, *infos_b[j].poly)) return;
      }
    }
  }
}

int cokernel_matrix_bigraded(const CaseSpec& spec, const MatrixAction& act,
                             int d) {
  std::map<BiDegree, Block> blocks;
  int open = 0;
  for (int i = 0; i <= d; ++i) {
    BiDegree bd{i, d - i};
    int dim = act.invariant_dim(bd);
    if (dim == 0) continue;  // rows landing here are invariant, hence zero
    blocks.emplace(bd, Block(monomial_basis(spec.vars, bd), dim));
    ++open;
  }
  if (open > 0) {
    for_matrix_rows(act, d, [&](BiDegree target, const Poly& u, const Poly& v) {
      auto it = blocks.find(target);
      if (it == blocks.end() || it->second.full()) return true;
      Poly br = bracket(spec.structure, u, v);
      if (!br.is_zero() && it->second.space.add(vectorize(br, it->second.index)))
        if (it->second.full()) --open;
      return open > 0;
    });
  }
  int coker = 0;
  for (const auto& [bd, blk] : blocks) coker += blk.target_dim - blk.space.rank();
  return coker;
}

int cokernel_matrix_plain(const CaseSpec& spec, const MatrixAction& act, int d) {
  int dim = act.invariant_dim(d);
  if (dim == 0) return 0;
  auto monos = monomial_basis(spec.vars, d);
  MonomialIndex index(monos);
  RowSpace space(static_cast<int>(monos.size()));
  for (int a = 1; 2 * a <= d + 2; ++a) {
    int b = d + 2 - a;
    const auto& basis_a = act.invariant_basis(a);
    const auto& basis_b = act.invariant_basis(b);
    for (std::size_t i = 0; i < basis_a.size(); ++i) {
      for (std::size_t j = (a == b) ? i + 1 : 0; j < basis_b.size(); ++j) {
        Poly br = bracket(spec.structure, basis_a[i], basis_b[j]);
        if (br.is_zero()) continue;
        space.add(vectorize(br, index));
        if (space.rank() == dim) return 0;
      }
    }
  }
  return dim - space.rank();
}

int cokernel_diagonal(const CaseSpec& spec, const DiagonalAction& act, int d) {
  std::map<std::vector<int>, std::vector<Monomial>> groups;
  for (const Poly& f : act.invariant_basis(d)) {
    const Monomial& m = f.terms().begin()->first;
    groups[act.weight(m)].push_back(m);
  }
  std::map<std::vector<int>, Block> blocks;
  int open = 0;
  for (const auto& [w, monos] : groups) {
    blocks.emplace(w, Block(monos, static_cast<int>(monos.size())));
    ++open;
  }
  if (open > 0) {
    for_diagonal_rows(
        act, d, false,
        [&](const std::vector<int>& target, const Poly& u, const Poly& v) {
          auto it = blocks.find(target);
          if (it == blocks.end() || it->second.full()) return true;
          Poly br = bracket(spec.structure, u, v);
          if (!br.is_zero() &&
              it->second.space.add(vectorize(br, it->second.index)))
            if (it->second.full()) --open;
          return open > 0;
        });
  }
  int coker = 0;
  for (const auto& [w, blk] : blocks) coker += blk.target_dim - blk.space.rank();
  return coker;
}

// Weight-block shortcut: for a nonzero block weight w pick i with w_i != 0;
// then {x_i y_i, m} = -w_i m for every block monomial m, and x_i y_i is
// itself invariant, so the block is entirely spanned by bracket rows. Only
// the weight-zero block can contribute to the cokernel.
int cokernel_diagonal_zero_block(const CaseSpec& spec, const DiagonalAction& act,
                                 int d) {
  std::vector<Monomial> zero_monos;
  for (const Poly& f : act.invariant_basis(d)) {
    const Monomial& m = f.terms().begin()->first;
    auto w = act.weight(m);
    if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; }))
      zero_monos.push_back(m);
  }
  if (zero_monos.empty()) return 0;
  Block blk(zero_monos, static_cast<int>(zero_monos.size()));
  for_diagonal_rows(
      act, d, true,
      [&](const std::vector<int>&, const Poly& u, const Poly& v) {
        if (blk.full()) return false;
        Poly br = bracket(spec.structure, u, v);
        if (!br.is_zero()) blk.space.add(vectorize(br, blk.index));
        return !blk.full();
      });
  return blk.target_dim - blk.space.rank();
}

void finalize(Hp0Report& r) {
  r.total = 0;
  for (const auto& [d, v] : r.per_degree) r.total += v;
  r.trailing_zeros = true;
  for (int d = r.scan_bound - r.trailing_zero_window + 1; d <= r.scan_bound; ++d) {
    auto it = r.per_degree.find(d);
    if (it == r.per_degree.end() || it->second != 0) r.trailing_zeros = false;
  }
}

// One degree of the certificate/obstruction shortcut. Non-covered shapes
// fall back to the full scan and are recorded as escalations.
int paper_degree_sl2(const CaseSpec& spec, const BiDimTable& table, int d,
                     std::vector<int>& escalated) {
  long long m = trivial_multiplicity(sl2_character(table, d));
  if (m == 0) return 0;
  const Sl2Context& ctx = *spec.sl2;
  if (m == 1 && d % 2 == 0 && (d / 2) % ctx.N == 0) {
    // The single trivial summand must be spanned by D^l, the only invariant
    // of its kind; decide its fate by certificate or obstruction.
    int l = d / 2;
    bool obstructed = obstruction_holds(table, l);
    if (spec.cert) {
      int alpha = (spec.cert->P.degree() + spec.cert->Q.degree() - 2) / 2;
      if (l >= alpha) {
        auto c = certify_power(ctx, spec.cert->P, spec.cert->Q,
                               spec.cert->beta, l - alpha);
        if (c && obstructed)
          throw std::logic_error(spec.name +
                                 ": certificate and obstruction both apply at degree " +
                                 std::to_string(d));
        if (c) return 0;
      }
    }
    if (obstructed) return 1;
  }
  escalated.push_back(d);
  return cokernel_dim(spec, d);
}

}  // namespace

int cokernel_dim(const CaseSpec& spec, int degree) {
  if (degree < 0) throw std::invalid_argument("cokernel_dim: negative degree");
  if (std::holds_alternative<DiagonalAction>(spec.action))
    return cokernel_diagonal(spec, std::get<DiagonalAction>(spec.action), degree);
  const auto& act = std::get<MatrixAction>(spec.action);
  if (act.preserves_sides() && side_coupled(spec.structure))
    return cokernel_matrix_bigraded(spec, act, degree);
  return cokernel_matrix_plain(spec, act, degree);
}

std::vector<SparseRow> bracket_span_rows(const CaseSpec& spec, int degree) {
  auto monos = monomial_basis(spec.vars, degree);
  MonomialIndex index(monos);
  std::vector<SparseRow> rows;
  for (int a = 1; 2 * a <= degree + 2; ++a) {
    int b = degree + 2 - a;
    const auto& basis_a = invariant_basis(spec.action, a);
    const auto& basis_b = invariant_basis(spec.action, b);
    for (std::size_t i = 0; i < basis_a.size(); ++i) {
      for (std::size_t j = (a == b) ? i + 1 : 0; j < basis_b.size(); ++j) {
        Poly br = bracket(spec.structure, basis_a[i], basis_b[j]);
        if (!br.is_zero()) rows.push_back(vectorize(br, index));
      }
    }
  }
  return rows;
}

bool is_invariant(const CaseSpec& spec, const Poly& f) {
  if (std::holds_alternative<MatrixAction>(spec.action)) {
    const auto& act = std::get<MatrixAction>(spec.action);
    for (const auto& g : act.generators())
      if (linear_substitute(f, g) != f) return false;
    return true;
  }
  const auto& act = std::get<DiagonalAction>(spec.action);
  for (const auto& [m, c] : f.terms())
    if (!act.invariant(m)) return false;
  return true;
}

namespace {

void check_span_input(const CaseSpec& spec, const Poly& f, const char* who) {
  if (f.is_zero())
    throw std::invalid_argument(std::string(who) + ": zero polynomial");
  if (!f.is_homogeneous())
    throw std::invalid_argument(std::string(who) + ": polynomial is not homogeneous");
  if (!is_invariant(spec, f))
    throw std::invalid_argument(std::string(who) + ": polynomial is not invariant");
}

struct MembershipEntry {
  MonomialIndex index;
  RowSpace space;
  SparseRow target;
  bool done = false;

  MembershipEntry(const std::vector<Monomial>& monos, SparseRow t)
      : index(monos), space(static_cast<int>(monos.size())), target(std::move(t)) {}
};

bool member_matrix_bigraded(const CaseSpec& spec, const MatrixAction& act,
                            const Poly& f, int d) {
  std::map<BiDegree, MembershipEntry> needed;
  for (int i = 0; i <= d; ++i) {
    BiDegree bd{i, d - i};
    Poly comp = f.component(bd);
    if (comp.is_zero()) continue;
    auto monos = monomial_basis(spec.vars, bd);
    MonomialIndex index(monos);
    needed.emplace(bd, MembershipEntry(monos, vectorize(comp, index)));
  }
  int remaining = static_cast<int>(needed.size());
  for_matrix_rows(act, d, [&](BiDegree target, const Poly& u, const Poly& v) {
    auto it = needed.find(target);
    if (it == needed.end() || it->second.done) return true;
    Poly br = bracket(spec.structure, u, v);
    if (!br.is_zero() && it->second.space.add(vectorize(br, it->second.index)) &&
        it->second.space.contains(it->second.target)) {
      it->second.done = true;
      --remaining;
    }
    return remaining > 0;
  });
  return remaining == 0;
}

bool member_diagonal(const CaseSpec& spec, const DiagonalAction& act,
                     const Poly& f, int d) {
  std::map<std::vector<int>, std::vector<Monomial>> groups;
  for (const Poly& g : act.invariant_basis(d)) {
    const Monomial& m = g.terms().begin()->first;
    groups[act.weight(m)].push_back(m);
  }
  std::map<std::vector<int>, Poly> comps;
  for (const auto& [m, c] : f.terms()) {
    auto w = act.weight(m);
    auto it = comps.find(w);
    if (it == comps.end()) it = comps.emplace(w, Poly::zero(spec.vars)).first;
    it->second.add_term(m, c);
  }
  std::map<std::vector<int>, MembershipEntry> needed;
  for (const auto& [w, comp] : comps) {
    const auto& monos = groups.at(w);
    MonomialIndex index(monos);
    needed.emplace(w, MembershipEntry(monos, vectorize(comp, index)));
  }
  int remaining = static_cast<int>(needed.size());
  for_diagonal_rows(
      act, d, false,
      [&](const std::vector<int>& target, const Poly& u, const Poly& v) {
        auto it = needed.find(target);
        if (it == needed.end() || it->second.done) return true;
        Poly br = bracket(spec.structure, u, v);
        if (!br.is_zero() &&
            it->second.space.add(vectorize(br, it->second.index)) &&
            it->second.space.contains(it->second.target)) {
          it->second.done = true;
          --remaining;
        }
        return remaining > 0;
      });
  return remaining == 0;
}

bool member_matrix_plain(const CaseSpec& spec, const MatrixAction& act,
                         const Poly& f, int d) {
  auto monos = monomial_basis(spec.vars, d);
  MonomialIndex index(monos);
  SparseRow target = vectorize(f, index);
  RowSpace space(static_cast<int>(monos.size()));
  bool found = false;
  for (int a = 1; 2 * a <= d + 2 && !found; ++a) {
    int b = d + 2 - a;
    const auto& basis_a = act.invariant_basis(a);
    const auto& basis_b = act.invariant_basis(b);
    for (std::size_t i = 0; i < basis_a.size() && !found; ++i) {
      for (std::size_t j = (a == b) ? i + 1 : 0; j < basis_b.size(); ++j) {
        Poly br = bracket(spec.structure, basis_a[i], basis_b[j]);
        if (br.is_zero()) continue;
        if (space.add(vectorize(br, index)) && space.contains(target)) {
          found = true;
          break;
        }
      }
    }
  }
  return found || space.contains(target);
}

}  // namespace

bool in_bracket_span(const CaseSpec& spec, const Poly& f) {
  check_span_input(spec, f, "span membership");
  int d = f.degree();
  if (std::holds_alternative<DiagonalAction>(spec.action))
    return member_diagonal(spec, std::get<DiagonalAction>(spec.action), f, d);
  const auto& act = std::get<MatrixAction>(spec.action);
  if (act.preserves_sides() && side_coupled(spec.structure))
    return member_matrix_bigraded(spec, act, f, d);
  return member_matrix_plain(spec, act, f, d);
}

IdealProbe ideal_probe(const CaseSpec& spec, const Poly& p, const Poly& q) {
  check_span_input(spec, p, "ideal probe (first factor)");
  check_span_input(spec, q, "ideal probe (second factor)");
  IdealProbe r;
  r.p_in_span = in_bracket_span(spec, p);
  r.pq_in_span = in_bracket_span(spec, p * q);
  return r;
}

Hp0Report hp0_scan(const CaseSpec& spec) {
  if (!spec.brute_allowed)
    throw std::invalid_argument(
        spec.name + ": full scan disabled for this case size; use paper mode");
  Hp0Report r;
  r.case_name = spec.name;
  r.mode = "bruteforce";
  r.scan_bound = spec.scan_bound;
  r.trailing_zero_window = spec.trailing_zero_window;
  for (int d = 0; d <= spec.scan_bound; ++d)
    r.per_degree[d] = cokernel_dim(spec, d);
  finalize(r);
  return r;
}

Hp0Report hp0_paper_mode(const CaseSpec& spec) {
  Hp0Report r;
  r.case_name = spec.name;
  r.mode = "paper";
  r.scan_bound = spec.paper_scan_bound;
  r.trailing_zero_window = spec.trailing_zero_window;
  if (spec.sl2) {
    const BiDimTable& table = spec.char_table(spec.paper_scan_bound + 2);
    for (int d = 0; d <= spec.paper_scan_bound; ++d)
      r.per_degree[d] = paper_degree_sl2(spec, table, d, r.escalated);
  } else if (std::holds_alternative<DiagonalAction>(spec.action)) {
    const auto& act = std::get<DiagonalAction>(spec.action);
    for (int d = 0; d <= spec.paper_scan_bound; ++d)
      r.per_degree[d] = cokernel_diagonal_zero_block(spec, act, d);
  } else {
    throw std::invalid_argument(
        spec.name + ": paper mode needs sl2 data or a diagonal torus action");
  }
  finalize(r);
  return r;
}

Hp0Report hp0_run(const CaseSpec& spec) {
  switch (spec.mode) {
    case Mode::bruteforce:
      return hp0_scan(spec);
    case Mode::paper:
      return hp0_paper_mode(spec);
    case Mode::both:
      break;
  }
  Hp0Report brute = hp0_scan(spec);
  Hp0Report paper = hp0_paper_mode(spec);
  Hp0Report r = paper;
  r.mode = "both";
  bool agree = true;
  int shared = std::min(brute.scan_bound, paper.scan_bound);
  for (int d = 0; d <= shared; ++d)
    if (brute.per_degree.at(d) != paper.per_degree.at(d)) agree = false;
  r.agreement = agree;
  r.scan_bound = std::max(brute.scan_bound, paper.scan_bound);
  for (const auto& [d, v] : brute.per_degree) r.per_degree[d] = v;
  finalize(r);
  return r;
}

nlohmann::json Hp0Report::to_json() const {
  nlohmann::json j;
  j["case"] = case_name;
  j["mode"] = mode;
  j["scan_bound"] = scan_bound;
  j["trailing_zero_window"] = trailing_zero_window;
  nlohmann::json pd = nlohmann::json::object();
  for (const auto& [d, v] : per_degree) pd[std::to_string(d)] = v;
  j["per_degree"] = pd;
  j["total"] = total;
  j["trailing_zeros"] = trailing_zeros;
  j["agreement"] = agreement ? nlohmann::json(*agreement) : nlohmann::json(nullptr);
  j["escalated"] = escalated;
  return j;
}

Hp0Report Hp0Report::from_json(const nlohmann::json& j) {
  Hp0Report r;
  r.case_name = j.at("case").get<std::string>();
  r.mode = j.at("mode").get<std::string>();
  r.scan_bound = j.at("scan_bound").get<int>();
  r.trailing_zero_window = j.at("trailing_zero_window").get<int>();
  for (const auto& [key, v] : j.at("per_degree").items())
    r.per_degree[std::stoi(key)] = v.get<int>();
  r.total = j.at("total").get<long long>();
  r.trailing_zeros = j.at("trailing_zeros").get<bool>();
  if (j.contains("agreement") && !j.at("agreement").is_null())
    r.agreement = j.at("agreement").get<bool>();
  if (j.contains("escalated"))
    r.escalated = j.at("escalated").get<std::vector<int>>();
  return r;
}

std::string Hp0Report::text() const {
  std::ostringstream os;
  os << "HP0(" << case_name << ") mode=" << mode << " bound=" << scan_bound
     << "\n";
  bool any = false;
  for (const auto& [d, v] : per_degree) {
    if (v != 0) {
      os << "  degree " << d << ": " << v << "\n";
      any = true;
    }
  }
  if (any)
    os << "  every other scanned degree: 0\n";
  else
    os << "  zero at every scanned degree\n";
  os << "  total: " << total << "\n";
  os << "  trailing " << trailing_zero_window
     << " degrees zero: " << (trailing_zeros ? "yes" : "no") << "\n";
  if (!escalated.empty()) {
    os << "  escalated to full scan at:";
    for (int d : escalated) os << ' ' << d;
    os << "\n";
  }
  if (agreement)
    os << "  mode agreement: " << (*agreement ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace poishom

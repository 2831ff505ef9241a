#include "poishom/case_spec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace poishom {

namespace {

RatMatrix matrix_of_longs(int n, const long* flat) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (flat[i * n + j] != 0) m.set(i, j, Rat(static_cast<int>(flat[i * n + j])));
  return m;
}

// Triangle coordinates a1, a2, a3 with a1 + a2 + a3 = 0, realized inside the
// symplectic plane spanned by (a1, b1, a2, b2).
struct TriangleVars {
  VarSetPtr vars;
  Poly a1, b1, a2, b2, a3, b3;
};

TriangleVars triangle_vars() {
  TriangleVars t;
  t.vars = VarSet::standard(2, "a", "b");
  t.a1 = Poly::variable(t.vars, 0);
  t.b1 = Poly::variable(t.vars, 1);
  t.a2 = Poly::variable(t.vars, 2);
  t.b2 = Poly::variable(t.vars, 3);
  t.a3 = -(t.a1 + t.a2);
  t.b3 = -(t.b1 + t.b2);
  return t;
}

// Bracket matrix for the triangle coordinates: {a_i, b_j} is 6 on the
// diagonal and -3 off it, all {a,a} and {b,b} vanish.
PoissonStructure triangle_structure(const TriangleVars& t) {
  static const long flat[16] = {0, 6,  0, -3,   //
                                -6, 0, 3, 0,    //
                                0, -3, 0, 6,    //
                                3, 0,  -6, 0};
  return PoissonStructure::from_matrix(t.vars, matrix_of_longs(4, flat));
}

// Dihedral-of-the-triangle generators: the transposition swapping the first
// two coordinates and the 3-cycle a1 -> a2 -> a3.
std::vector<RatMatrix> triangle_generators() {
  static const long swap_flat[16] = {0, 0, 1, 0,  //
                                     0, 0, 0, 1,  //
                                     1, 0, 0, 0,  //
                                     0, 1, 0, 0};
  static const long cycle_flat[16] = {0, 0,  1, 0,   //
                                      0, 0,  0, 1,   //
                                      -1, 0, -1, 0,  //
                                      0, -1, 0, -1};
  return {matrix_of_longs(4, swap_flat), matrix_of_longs(4, cycle_flat)};
}

Sl2Context triangle_sl2(const TriangleVars& t, const PoissonStructure& ps) {
  Rat ninth(1);
  ninth /= 9;
  Poly E = (t.a1 * t.a2 + t.a2 * t.a3 + t.a1 * t.a3).scaled(-ninth);
  Poly S2 = (t.b1 * t.b2 + t.b2 * t.b3 + t.b1 * t.b3).scaled(-ninth);
  Poly H = (t.a1 * t.b1 + t.a2 * t.b2 + t.a3 * t.b3).scaled(-ninth);
  Poly D = t.a1 * t.b2 - t.b1 * t.a2;
  return Sl2Context{ps, E, -S2, H, D, 2};
}

std::string braced(const std::string& family, int n) {
  std::ostringstream os;
  os << family << '{' << n << '}';
  return os.str();
}

std::vector<std::vector<int>> reduce_generators(
    std::vector<std::vector<int>> gens, int n, int modulus,
    const std::string& who) {
  for (auto& g : gens) {
    if (static_cast<int>(g.size()) != n)
      throw std::invalid_argument(who + ": generator length must equal the number of pairs");
    for (auto& w : g) {
      w %= modulus;
      if (w < 0) w += modulus;
    }
  }
  return gens;
}

Rat rat_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return rat_parse(v.get<std::string>());
  throw std::invalid_argument("custom case: matrix entries must be integers or \"num/den\" strings");
}

}  // namespace

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::bruteforce: return "bruteforce";
    case Mode::paper: return "paper";
    case Mode::both: return "both";
  }
  throw std::logic_error("unreachable");
}

Mode mode_from_name(const std::string& name) {
  if (name == "bruteforce") return Mode::bruteforce;
  if (name == "paper") return Mode::paper;
  if (name == "both") return Mode::both;
  throw std::invalid_argument("unknown mode: " + name +
                              " (expected bruteforce, paper, or both)");
}

CaseSpec::CaseSpec(std::string name_, PoissonStructure structure_, Action action_)
    : name(std::move(name_)),
      vars(structure_.vars),
      structure(std::move(structure_)),
      action(std::move(action_)) {}

int CaseSpec::invariant_dim(int degree) const {
  return poishom::invariant_dim(action, degree);
}

const std::vector<Poly>& CaseSpec::invariant_basis(int degree) const {
  return poishom::invariant_basis(action, degree);
}

const BiDimTable& CaseSpec::char_table(int bound) const {
  if (!table_ || table_->bound < bound) table_ = bidim_table(action, bound);
  return *table_;
}

CaseSpec make_cyclic(int n) {
  if (n < 2) throw std::invalid_argument("Cyclic{n} needs n >= 2");
  auto vars = VarSet::standard(2);
  CaseSpec spec(braced("Cyclic", n), PoissonStructure::standard(vars),
                DiagonalAction(vars, n, {{1, 1}}));
  spec.scan_bound = spec.paper_scan_bound = 4 * n;
  return spec;
}

CaseSpec make_a2() {
  TriangleVars t = triangle_vars();
  PoissonStructure ps = triangle_structure(t);
  CaseSpec spec("A2", ps, MatrixAction(t.vars, triangle_generators()));
  spec.sl2 = triangle_sl2(t, ps);
  Poly P = t.a1 * t.a1 * t.a2 + t.a1 * t.a2 * t.a2;
  spec.cert = CertificateSeed{P, P, 3};
  spec.scan_bound = spec.paper_scan_bound = 12;
  return spec;
}

CaseSpec make_b2() {
  auto vars = VarSet::standard(2);
  PoissonStructure ps = PoissonStructure::standard(vars);
  Poly x1 = Poly::variable(vars, 0), y1 = Poly::variable(vars, 1);
  Poly x2 = Poly::variable(vars, 2), y2 = Poly::variable(vars, 3);

  static const long neg_first[16] = {-1, 0, 0, 0,  //
                                     0, -1, 0, 0,  //
                                     0, 0,  1, 0,  //
                                     0, 0,  0, 1};
  static const long neg_second[16] = {1, 0, 0, 0,   //
                                      0, 1, 0, 0,   //
                                      0, 0, -1, 0,  //
                                      0, 0, 0, -1};
  static const long swap_pairs[16] = {0, 0, 1, 0,  //
                                      0, 0, 0, 1,  //
                                      1, 0, 0, 0,  //
                                      0, 1, 0, 0};
  MatrixAction action(vars, {matrix_of_longs(4, neg_first),
                             matrix_of_longs(4, neg_second),
                             matrix_of_longs(4, swap_pairs)});
  CaseSpec spec("B2", ps, std::move(action));

  Rat half(1);
  half /= 2;
  Poly E = (x1 * x1 + x2 * x2).scaled(half);
  Poly F = (y1 * y1 + y2 * y2).scaled(-half);
  Poly H = -(x1 * y1 + x2 * y2);
  Poly D = x1 * y2 - y1 * x2;
  spec.sl2 = Sl2Context{ps, E, F, H, D, 2};

  Poly P = x1.pow(4) + x2.pow(4);
  Poly Q = x1.pow(4) * x2 * y2 + x1 * y1 * x2.pow(4) - x1.pow(3) * y1 * x2 * x2 -
           x1 * x1 * x2.pow(3) * y2;
  spec.cert = CertificateSeed{P, Q, 4};
  spec.scan_bound = spec.paper_scan_bound = 14;
  return spec;
}

CaseSpec make_g2() {
  TriangleVars t = triangle_vars();
  PoissonStructure ps = triangle_structure(t);
  static const long neg_id[16] = {-1, 0, 0, 0,  //
                                  0, -1, 0, 0,  //
                                  0, 0, -1, 0,  //
                                  0, 0, 0, -1};
  auto gens = triangle_generators();
  gens.push_back(matrix_of_longs(4, neg_id));
  CaseSpec spec("G2", ps, MatrixAction(t.vars, std::move(gens)));
  spec.sl2 = triangle_sl2(t, ps);

  Poly P = t.a1.pow(6) + t.a2.pow(6) + t.a3.pow(6);
  Poly Q = t.a1.pow(6) * (t.a2 * t.b2 + t.a3 * t.b3) +
           t.a2.pow(6) * (t.a1 * t.b1 + t.a3 * t.b3) +
           t.a3.pow(6) * (t.a1 * t.b1 + t.a2 * t.b2) -
           t.a1.pow(5) * t.b1 * (t.a2 * t.a2 + t.a3 * t.a3) -
           t.a2.pow(5) * t.b2 * (t.a1 * t.a1 + t.a3 * t.a3) -
           t.a3.pow(5) * t.b3 * (t.a1 * t.a1 + t.a2 * t.a2);
  spec.cert = CertificateSeed{P, Q, 6};
  spec.scan_bound = 20;
  spec.paper_scan_bound = 28;
  return spec;
}

CaseSpec make_pm1(int n, std::vector<std::vector<int>> subgroup_generators) {
  if (n < 1) throw std::invalid_argument("Pm1{n} needs n >= 1");
  auto vars = VarSet::standard(n);
  if (subgroup_generators.empty()) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      subgroup_generators.push_back(std::move(e));
    }
  }
  subgroup_generators =
      reduce_generators(std::move(subgroup_generators), n, 2, "Pm1");
  CaseSpec spec(braced("Pm1", n), PoissonStructure::standard(vars),
                DiagonalAction(vars, 2, std::move(subgroup_generators)));
  spec.scan_bound = spec.paper_scan_bound = 2 * n + 4;
  return spec;
}

CaseSpec make_z3(int n) {
  if (n < 2) throw std::invalid_argument("Z3{n} needs n >= 2");
  auto vars = VarSet::standard(n);
  // The subgroup of (Z/3)^n whose coordinates sum to zero, generated by
  // the n-1 consecutive differences e_i - e_{i+1}.
  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> g(n, 0);
    g[i] = 1;
    g[i + 1] = 2;
    gens.push_back(std::move(g));
  }
  CaseSpec spec(braced("Z3", n), PoissonStructure::standard(vars),
                DiagonalAction(vars, 3, std::move(gens)));
  spec.scan_bound = spec.paper_scan_bound = 2 * n + 6;
  spec.brute_allowed = n <= 3;
  if (!spec.brute_allowed) spec.mode = Mode::paper;
  return spec;
}

CaseSpec make_custom_json(const std::string& json_text, const std::string& label) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("custom case: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("custom case: top level must be an object");
  if (!j.contains("flavor") || !j["flavor"].is_string())
    throw std::invalid_argument("custom case: missing string field \"flavor\"");
  if (!j.contains("pairs") || !j["pairs"].is_number_integer())
    throw std::invalid_argument("custom case: missing integer field \"pairs\"");
  int pairs = j["pairs"].get<int>();
  if (pairs < 1 || pairs > 8)
    throw std::invalid_argument("custom case: \"pairs\" must be between 1 and 8");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw std::invalid_argument("custom case: missing array field \"generators\"");

  std::string flavor = j["flavor"].get<std::string>();
  std::string name = j.value("name", "Custom{" + label + "}");
  auto vars = VarSet::standard(pairs);

  if (flavor == "diagonal") {
    if (!j.contains("modulus") || !j["modulus"].is_number_integer())
      throw std::invalid_argument("custom case: diagonal flavor needs integer \"modulus\"");
    int modulus = j["modulus"].get<int>();
    if (modulus < 1) throw std::invalid_argument("custom case: \"modulus\" must be positive");
    std::vector<std::vector<int>> gens;
    for (const auto& row : j["generators"]) {
      if (!row.is_array())
        throw std::invalid_argument("custom case: diagonal generators must be arrays of integers");
      std::vector<int> g;
      for (const auto& v : row) {
        if (!v.is_number_integer())
          throw std::invalid_argument("custom case: diagonal generator entries must be integers");
        g.push_back(v.get<int>());
      }
      gens.push_back(std::move(g));
    }
    gens = reduce_generators(std::move(gens), pairs, modulus, "custom case");
    CaseSpec spec(name, PoissonStructure::standard(vars),
                  DiagonalAction(vars, modulus, std::move(gens)));
    spec.scan_bound = spec.paper_scan_bound = j.value("bound", 12);
    return spec;
  }

  if (flavor == "matrix") {
    int dim = 2 * pairs;
    std::vector<RatMatrix> gens;
    for (const auto& rows : j["generators"]) {
      if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
        throw std::invalid_argument("custom case: matrix generators must be " +
                                    std::to_string(dim) + "x" + std::to_string(dim) +
                                    " row arrays");
      RatMatrix m(dim, dim);
      for (int i = 0; i < dim; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
          throw std::invalid_argument("custom case: matrix generator rows must have length " +
                                      std::to_string(dim));
        for (int c = 0; c < dim; ++c) m.set(i, c, rat_from_json(row[c]));
      }
      gens.push_back(std::move(m));
    }
    PoissonStructure ps = PoissonStructure::standard(vars);
    if (j.contains("structure")) {
      const auto& rows = j["structure"];
      if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
        throw std::invalid_argument("custom case: \"structure\" must be a " +
                                    std::to_string(dim) + "x" + std::to_string(dim) +
                                    " matrix");
      RatMatrix p(dim, dim);
      for (int i = 0; i < dim; ++i)
        for (int c = 0; c < dim; ++c) p.set(i, c, rat_from_json(rows[i][c]));
      ps = PoissonStructure::from_matrix(vars, std::move(p));
    }
    MatrixAction action(vars, std::move(gens));
    if (!preserves_structure(action, ps))
      throw std::invalid_argument("custom case: generators do not preserve the bracket matrix");
    CaseSpec spec(name, std::move(ps), std::move(action));
    spec.scan_bound = spec.paper_scan_bound = j.value("bound", 12);
    return spec;
  }

  throw std::invalid_argument("custom case: flavor must be \"diagonal\" or \"matrix\"");
}

CaseSpec make_custom_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("custom case: cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return make_custom_json(buf.str(), path);
}

CaseSpec make_case(const std::string& family, int n,
                   std::vector<std::vector<int>> subgroup_generators) {
  if (family == "A2") return make_a2();
  if (family == "B2") return make_b2();
  if (family == "G2") return make_g2();
  if (family == "Cyclic") return make_cyclic(n);
  if (family == "Pm1") return make_pm1(n, std::move(subgroup_generators));
  if (family == "Z3") return make_z3(n);
  throw std::invalid_argument(
      "unknown case family: " + family +
      " (expected Cyclic, A2, B2, G2, Pm1, or Z3)");
}

}  // namespace poishom

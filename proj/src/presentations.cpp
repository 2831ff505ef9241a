#include "poishom/presentations.hpp"

#include <stdexcept>

#include "poishom/hp0.hpp"
#include "poishom/poisson.hpp"

namespace poishom {

namespace {

// Concrete A2 generators over the triangle coordinates; the shared ring for
// the A2 and G2 systems.
struct TriangleGenerators {
  Poly S1, S2, T1, T2, H, U1, U2;
};

TriangleGenerators triangle_generators_concrete(const VarSetPtr& vars) {
  Poly a1 = Poly::variable(vars, 0), b1 = Poly::variable(vars, 1);
  Poly a2 = Poly::variable(vars, 2), b2 = Poly::variable(vars, 3);
  Poly a3 = -(a1 + a2), b3 = -(b1 + b2);
  Rat ninth = rat_of(-1, 9);
  TriangleGenerators g;
  g.S1 = (a1 * a2 + a2 * a3 + a1 * a3).scaled(ninth);
  g.S2 = (b1 * b2 + b2 * b3 + b1 * b3).scaled(ninth);
  g.T1 = (a1 * a2 * a3).scaled(ninth);
  g.T2 = (b1 * b2 * b3).scaled(ninth);
  g.H = (a1 * b1 + a2 * b2 + a3 * b3).scaled(ninth);
  g.U1 = (a1 * b1 * b1 + a2 * b2 * b2 + a3 * b3 * b3).scaled(ninth);
  g.U2 = (a1 * a1 * b1 + a2 * a2 * b2 + a3 * a3 * b3).scaled(ninth);
  return g;
}

GeneratorSystem build_a2_system() {
  CaseSpec spec = make_a2();
  TriangleGenerators g = triangle_generators_concrete(spec.vars);
  std::vector<std::string> names = {"S1", "S2", "T1", "T2", "H", "U1", "U2"};
  return GeneratorSystem{RingId::A2,
                         std::move(spec),
                         VarSet::plain(names),
                         names,
                         {g.S1, g.S2, g.T1, g.T2, g.H, g.U1, g.U2}};
}

GeneratorSystem build_g2_system() {
  CaseSpec spec = make_g2();
  TriangleGenerators g = triangle_generators_concrete(spec.vars);
  std::vector<std::string> names = {"S1",  "S2",  "T1'", "T2'", "Z",
                                    "H",   "U11", "U12", "U21", "U22"};
  return GeneratorSystem{RingId::G2,
                         std::move(spec),
                         VarSet::plain(names),
                         names,
                         {g.S1, g.S2, g.T1 * g.T1, g.T2 * g.T2, g.T1 * g.T2,
                          g.H, g.T1 * g.U1, g.T1 * g.U2, g.T2 * g.U1,
                          g.T2 * g.U2}};
}

GeneratorSystem build_b2_system() {
  CaseSpec spec = make_b2();
  const VarSetPtr& vars = spec.vars;
  Poly x1 = Poly::variable(vars, 0), y1 = Poly::variable(vars, 1);
  Poly x2 = Poly::variable(vars, 2), y2 = Poly::variable(vars, 3);
  std::vector<std::string> names = {"S1", "S2", "T1", "T2",
                                    "Z1", "Z2", "Z3", "Z4"};
  return GeneratorSystem{RingId::B2,
                         std::move(spec),
                         VarSet::plain(names),
                         names,
                         {x1 * x1 + x2 * x2, x1 * x1 * x2 * x2,
                          y1 * y1 + y2 * y2, y1 * y1 * y2 * y2,
                          x1 * y1 + x2 * y2, x1 * y1 * x2 * y2,
                          x1 * y1.pow(3) + x2 * y2.pow(3),
                          x1.pow(3) * y1 + x2.pow(3) * y2}};
}

// Shorthand for relation construction: formal variables of a system.
struct FormalVars {
  const GeneratorSystem& sys;
  Poly operator()(const char* name) const {
    return Poly::variable(sys.formal, sys.formal->index_of(name));
  }
};

std::vector<Relation> a2_relations() {
  GeneratorSystem sys = generator_system(RingId::A2);
  FormalVars v{sys};
  Poly S1 = v("S1"), S2 = v("S2"), T1 = v("T1"), T2 = v("T2");
  Poly H = v("H"), U1 = v("U1"), U2 = v("U2");
  std::vector<Relation> rels;
  rels.push_back({"H^4", H.pow(4),
                  (S1.pow(2) * S2.pow(2)).scaled(Rat(-4)) +
                      (T1 * T2 * H).scaled(Rat(-3)) +
                      (S1 * S2 * H.pow(2)).scaled(Rat(5)) - T1 * S2 * U1 -
                      S1 * T2 * U2,
                  std::nullopt});
  rels.push_back({"H*U1", H * U1, (S1 * T2).scaled(Rat(-3)) - S2 * U2,
                  std::nullopt});
  rels.push_back({"H*U2", H * U2, (T1 * S2).scaled(Rat(-3)) - S1 * U1,
                  std::nullopt});
  rels.push_back({"U1^2", U1.pow(2),
                  (S1 * S2.pow(2)).scaled(Rat(12)) -
                      (S2 * H.pow(2)).scaled(Rat(3)) + (T2 * U2).scaled(Rat(3)),
                  std::nullopt});
  rels.push_back({"U2^2", U2.pow(2),
                  (S1.pow(2) * S2).scaled(Rat(12)) -
                      (S1 * H.pow(2)).scaled(Rat(3)) + (T1 * U1).scaled(Rat(3)),
                  std::nullopt});
  // Printed with 3H^2; the two sides then differ in degree. 3H^3 verifies.
  rels.push_back({"U1*U2", U1 * U2,
                  (T1 * T2).scaled(Rat(9)) - (S1 * S2 * H).scaled(Rat(12)) +
                      H.pow(2).scaled(Rat(3)),
                  (T1 * T2).scaled(Rat(9)) - (S1 * S2 * H).scaled(Rat(12)) +
                      H.pow(3).scaled(Rat(3))});
  return rels;
}

std::vector<Relation> g2_relations() {
  GeneratorSystem sys = generator_system(RingId::G2);
  FormalVars v{sys};
  Poly S1 = v("S1"), S2 = v("S2"), T1p = v("T1'"), T2p = v("T2'");
  Poly Z = v("Z"), H = v("H");
  Poly U11 = v("U11"), U12 = v("U12"), U21 = v("U21"), U22 = v("U22");
  std::vector<Relation> rels;
  rels.push_back({"Z^2", Z.pow(2), T1p * T2p, std::nullopt});
  rels.push_back({"H^4", H.pow(4),
                  (S1.pow(2) * S2.pow(2)).scaled(Rat(-4)) -
                      (Z * H).scaled(Rat(3)) + (S1 * S2 * H.pow(2)).scaled(Rat(5)) -
                      S2 * U11 - S1 * U22,
                  std::nullopt});
  rels.push_back({"H*U11", H * U11, (S1 * Z).scaled(Rat(-3)) - S2 * U12,
                  std::nullopt});
  // Printed -S2*U11; only -S1*U11 verifies.
  rels.push_back({"H*U12", H * U12, (S2 * T1p).scaled(Rat(-3)) - S2 * U11,
                  (S2 * T1p).scaled(Rat(-3)) - S1 * U11});
  rels.push_back({"H*U21", H * U21, (S1 * T2p).scaled(Rat(-3)) - S2 * U22,
                  std::nullopt});
  // Printed -S2*U21; only -S1*U21 verifies.
  rels.push_back({"H*U22", H * U22, (S2 * Z).scaled(Rat(-3)) - S2 * U21,
                  (S2 * Z).scaled(Rat(-3)) - S1 * U21});
  rels.push_back({"U11^2", U11.pow(2),
                  (S1 * S2.pow(2) * T1p).scaled(Rat(12)) -
                      (S2 * T1p * H.pow(2)).scaled(Rat(3)) +
                      (T1p * U22).scaled(Rat(3)),
                  std::nullopt});
  rels.push_back({"U11*U12", U11 * U12,
                  (Z * T1p).scaled(Rat(9)) - (S1 * S2 * T1p * H).scaled(Rat(12)) +
                      (T1p * H.pow(3)).scaled(Rat(3)),
                  std::nullopt});
  rels.push_back({"U11*U21", U11 * U21,
                  (S1 * S2.pow(2) * Z).scaled(Rat(12)) -
                      (S2 * Z * H.pow(2)).scaled(Rat(3)) + (Z * U22).scaled(Rat(3)),
                  std::nullopt});
  rels.push_back({"U11*U22", U11 * U22,
                  Z.pow(2).scaled(Rat(9)) - (S1 * S2 * Z * H).scaled(Rat(12)) +
                      (Z * H.pow(3)).scaled(Rat(3)),
                  std::nullopt});
  rels.push_back({"U12^2", U12.pow(2),
                  (S1.pow(2) * S2 * T1p).scaled(Rat(12)) -
                      (S1 * T1p * H.pow(2)).scaled(Rat(3)) +
                      (T1p * U11).scaled(Rat(3)),
                  std::nullopt});
  rels.push_back({"U12*U21", U12 * U21,
                  Z.pow(2).scaled(Rat(9)) - (S1 * S2 * Z * H).scaled(Rat(12)) +
                      (Z * H.pow(3)).scaled(Rat(3)),
                  std::nullopt});
  rels.push_back({"U12*U22", U12 * U22,
                  (S1.pow(2) * S2 * Z).scaled(Rat(12)) -
                      (S1 * Z * H.pow(2)).scaled(Rat(3)) + (Z * U11).scaled(Rat(3)),
                  std::nullopt});
  rels.push_back({"U21^2", U21.pow(2),
                  (S1 * S2.pow(2) * T2p).scaled(Rat(12)) -
                      (S2 * T2p * H.pow(2)).scaled(Rat(3)) +
                      (T2p * U22).scaled(Rat(3)),
                  std::nullopt});
  rels.push_back({"U21*U22", U21 * U22,
                  (Z * T2p).scaled(Rat(9)) - (S1 * S2 * T2p * H).scaled(Rat(12)) +
                      (T2p * H.pow(3)).scaled(Rat(3)),
                  std::nullopt});
  rels.push_back({"U22^2", U22.pow(2),
                  (S1.pow(2) * S2 * T2p).scaled(Rat(12)) -
                      (S1 * T2p * H.pow(2)).scaled(Rat(3)) +
                      (T2p * U11).scaled(Rat(3)),
                  std::nullopt});
  rels.push_back({"Z*U11", Z * U11, T1p * U21, std::nullopt});
  rels.push_back({"Z*U12", Z * U12, T1p * U22, std::nullopt});
  rels.push_back({"Z*U21", Z * U21, T2p * U11, std::nullopt});
  rels.push_back({"Z*U22", Z * U22, T2p * U12, std::nullopt});
  return rels;
}

std::vector<Relation> b2_relations() {
  GeneratorSystem sys = generator_system(RingId::B2);
  FormalVars v{sys};
  Poly S1 = v("S1"), S2 = v("S2"), T1 = v("T1"), T2 = v("T2");
  Poly Z1 = v("Z1"), Z2 = v("Z2"), Z3 = v("Z3"), Z4 = v("Z4");
  Rat q = rat_of(1, 4);
  std::vector<Relation> rels;
  // Printed without the leading Z1 factors (and with Z1^2 for Z1^3); the
  // sides then have opposite bidegree parity. The corrected form verifies.
  Poly head = (S2 * T2).scaled(Rat(16)) - (S2 * T1.pow(2)).scaled(Rat(5)) -
              (S1.pow(2) * T2).scaled(Rat(5)) +
              (S1.pow(2) * T1.pow(2)).scaled(rat_of(1, 2));
  Poly z3_coeff = (S2 * T1).scaled(Rat(4)) - (S1.pow(2) * T1).scaled(rat_of(1, 2));
  Poly z4_coeff = (S1 * T2).scaled(Rat(4)) - (S1 * T1.pow(2)).scaled(rat_of(1, 2));
  rels.push_back({"Z1^5", Z1.pow(5),
                  head + (S1 * T1 * Z1.pow(2)).scaled(rat_of(3, 2)) +
                      z3_coeff * Z3 + z4_coeff * Z4,
                  head * Z1 + (S1 * T1 * Z1.pow(3)).scaled(rat_of(3, 2)) +
                      z3_coeff * Z3 + z4_coeff * Z4});
  rels.push_back({"Z1*Z2", Z1 * Z2,
                  (S1 * T1 * Z1).scaled(q) + Z1.pow(3).scaled(q) -
                      (S1 * Z3).scaled(q) - (T1 * Z4).scaled(q),
                  std::nullopt});
  rels.push_back({"Z1*Z3", Z1 * Z3,
                  -(S1 * T2) + T1 * Z1.pow(2) - T1 * Z2, std::nullopt});
  rels.push_back({"Z1*Z4", Z1 * Z4,
                  -(S2 * T1) + S1 * Z1.pow(2) - S1 * Z2, std::nullopt});
  rels.push_back({"Z2^2", Z2.pow(2), S2 * T2, std::nullopt});
  rels.push_back({"Z2*Z3", Z2 * Z3,
                  ((S1 * T1.pow(2)).scaled(q) - S1 * T2) * Z1 +
                      (T1 * Z1.pow(3)).scaled(q) - (S1 * T1 * Z3).scaled(q) +
                      (T2 - T1.pow(2).scaled(q)) * Z4,
                  std::nullopt});
  rels.push_back({"Z2*Z4", Z2 * Z4,
                  ((S1.pow(2) * T1).scaled(q) - S2 * T1) * Z1 +
                      (S1 * Z1.pow(3)).scaled(q) +
                      (S2 - S1.pow(2).scaled(q)) * Z3 - (S1 * T1 * Z4).scaled(q),
                  std::nullopt});
  rels.push_back({"Z3^2", Z3.pow(2),
                  -(S1 * T1 * T2) + (T1.pow(2) - T2) * Z1.pow(2) +
                      (T2.scaled(Rat(4)) - T1.pow(2).scaled(Rat(2))) * Z2,
                  std::nullopt});
  rels.push_back({"Z3*Z4", Z3 * Z4,
                  (S2 * T2).scaled(Rat(4)) - (S2 * T1.pow(2)).scaled(rat_of(5, 4)) -
                      (S1.pow(2) * T2).scaled(rat_of(5, 4)) +
                      (S1 * T1 * Z1.pow(2)).scaled(rat_of(5, 4)) -
                      Z1.pow(4).scaled(q) - (S1 * T1 * Z2).scaled(rat_of(3, 2)),
                  std::nullopt});
  rels.push_back({"Z4^2", Z4.pow(2),
                  -(S1 * S2 * T1) + (S1.pow(2) - S2) * Z1.pow(2) +
                      (S2.scaled(Rat(4)) - S1.pow(2).scaled(Rat(2))) * Z2,
                  std::nullopt});
  return rels;
}

// Upper triangle of the published closure table; the rest follows by
// antisymmetry.
void fill_closure_upper(const GeneratorSystem& sys, FormalTable& t) {
  FormalVars v{sys};
  Poly S1 = v("S1"), S2 = v("S2"), T1 = v("T1"), T2 = v("T2");
  Poly H = v("H"), U1 = v("U1"), U2 = v("U2");
  auto at = [&](const char* r, const char* c) -> Poly& {
    return t[sys.formal->index_of(r)][sys.formal->index_of(c)];
  };
  at("S1", "S2") = -H;
  at("S1", "T2") = U1;
  at("S1", "H") = S1.scaled(Rat(-2));
  at("S1", "U1") = U2.scaled(Rat(2));
  at("S1", "U2") = T1.scaled(Rat(3));
  at("S2", "T1") = -U2;
  at("S2", "H") = S2.scaled(Rat(2));
  at("S2", "U1") = T2.scaled(Rat(-3));
  at("S2", "U2") = U1.scaled(Rat(-2));
  at("T1", "T2") = (S1 * S2).scaled(Rat(-6)) + H.pow(2).scaled(Rat(3));
  at("T1", "H") = T1.scaled(Rat(-3));
  at("T1", "U1") = (S1 * H).scaled(Rat(-6));
  at("T1", "U2") = S1.pow(2).scaled(Rat(6));
  at("T2", "H") = T2.scaled(Rat(3));
  at("T2", "U1") = S2.pow(2).scaled(Rat(-6));
  at("T2", "U2") = (S2 * H).scaled(Rat(6));
  at("H", "U1") = -U1;
  at("H", "U2") = U2;
  at("U1", "U2") = (S1 * S2).scaled(Rat(-30)) + H.pow(2).scaled(Rat(3));
}

}  // namespace

std::string ring_name(RingId ring) {
  switch (ring) {
    case RingId::A2: return "A2";
    case RingId::B2: return "B2";
    case RingId::G2: return "G2";
  }
  throw std::logic_error("unreachable");
}

RingId ring_from_name(const std::string& name) {
  if (name == "A2") return RingId::A2;
  if (name == "B2") return RingId::B2;
  if (name == "G2") return RingId::G2;
  throw std::invalid_argument("unknown ring: " + name + " (expected A2, B2, or G2)");
}

int GeneratorSystem::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown generator: " + name);
}

const Poly& GeneratorSystem::by_name(const std::string& name) const {
  return concrete[index_of(name)];
}

GeneratorSystem generator_system(RingId ring) {
  // One instance per ring: every caller sees the same variable sets, so
  // polynomials built from different calls combine freely.
  switch (ring) {
    case RingId::A2: {
      static const GeneratorSystem sys = build_a2_system();
      return sys;
    }
    case RingId::B2: {
      static const GeneratorSystem sys = build_b2_system();
      return sys;
    }
    case RingId::G2: {
      static const GeneratorSystem sys = build_g2_system();
      return sys;
    }
  }
  throw std::logic_error("unreachable");
}

Poly eval_formal(const Poly& formal_poly, const GeneratorSystem& sys) {
  VarSetPtr cv = sys.concrete.at(0).vars();
  int n = static_cast<int>(sys.concrete.size());
  std::vector<std::vector<Poly>> pows(n);
  auto power = [&](int i, int e) -> const Poly& {
    auto& cache = pows[i];
    if (cache.empty()) cache.push_back(Poly::constant(cv, Rat(1)));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * sys.concrete[i]);
    return cache[e];
  };
  Poly out = Poly::zero(cv);
  for (const auto& [m, c] : formal_poly.terms()) {
    Poly term = Poly::constant(cv, c);
    for (int i = 0; i < n; ++i)
      if (m.e[i] > 0) term = term * power(i, m.e[i]);
    out += term;
  }
  return out;
}

std::vector<Relation> ring_relations(RingId ring) {
  switch (ring) {
    case RingId::A2: return a2_relations();
    case RingId::B2: return b2_relations();
    case RingId::G2: return g2_relations();
  }
  throw std::logic_error("unreachable");
}

std::vector<RelationCheck> verify_relations(RingId ring) {
  GeneratorSystem sys = generator_system(ring);
  std::vector<RelationCheck> out;
  for (const Relation& rel : ring_relations(ring)) {
    RelationCheck check;
    check.id = rel.id;
    Poly lhs = eval_formal(rel.lhs, sys);
    check.printed_residual = lhs - eval_formal(rel.printed_rhs, sys);
    check.printed_holds = check.printed_residual.is_zero();
    check.has_correction = rel.corrected_rhs.has_value();
    if (check.has_correction) {
      check.corrected_residual = lhs - eval_formal(*rel.corrected_rhs, sys);
      check.corrected_holds = check.corrected_residual.is_zero();
    } else {
      check.corrected_residual = check.printed_residual;
      check.corrected_holds = check.printed_holds;
    }
    out.push_back(std::move(check));
  }
  return out;
}

const std::vector<std::string>& closure_table_names() {
  static const std::vector<std::string> names = {"S1", "S2", "T1", "T2",
                                                 "H",  "U1", "U2"};
  return names;
}

FormalTable closure_table() {
  GeneratorSystem sys = generator_system(RingId::A2);
  FormalTable t;
  for (auto& row : t)
    for (auto& e : row) e = Poly::zero(sys.formal);
  fill_closure_upper(sys, t);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < i; ++j) t[i][j] = -t[j][i];
  return t;
}

std::vector<TableCheck> verify_closure_table() {
  GeneratorSystem sys = generator_system(RingId::A2);
  FormalTable t = closure_table();
  std::vector<TableCheck> out;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      TableCheck check;
      check.row = sys.names[i];
      check.col = sys.names[j];
      Poly lhs = bracket(sys.spec.structure, sys.concrete[i], sys.concrete[j]);
      check.residual = lhs - eval_formal(t[i][j], sys);
      check.holds = check.residual.is_zero();
      out.push_back(std::move(check));
    }
  }
  return out;
}

namespace {

// Biderivation on the free 7-variable ring defined by the table.
Poly table_bracket(const FormalTable& t, const VarSetPtr& formal, const Poly& f,
                   const Poly& g) {
  Poly r = Poly::zero(formal);
  for (int i = 0; i < 7; ++i) {
    Poly df = partial(f, i);
    if (df.is_zero()) continue;
    for (int j = 0; j < 7; ++j) {
      if (t[i][j].is_zero()) continue;
      Poly dg = partial(g, j);
      if (dg.is_zero()) continue;
      r += t[i][j] * df * dg;
    }
  }
  return r;
}

}  // namespace

std::vector<JacobiCheck> jacobi_scan(const FormalTable& table) {
  // The table's own variable set; entries and products must share it.
  VarSetPtr formal = table[0][0].vars();
  const auto& names = closure_table_names();
  std::vector<JacobiCheck> out;
  for (int i = 0; i < 7; ++i) {
    Poly vi = Poly::variable(formal, i);
    for (int j = i + 1; j < 7; ++j) {
      Poly vj = Poly::variable(formal, j);
      for (int k = j + 1; k < 7; ++k) {
        Poly vk = Poly::variable(formal, k);
        JacobiCheck check;
        check.a = names[i];
        check.b = names[j];
        check.c = names[k];
        check.jacobiator = table_bracket(table, formal, vi, table[j][k]) +
                           table_bracket(table, formal, vj, table[k][i]) +
                           table_bracket(table, formal, vk, table[i][j]);
        check.holds = check.jacobiator.is_zero();
        out.push_back(std::move(check));
      }
    }
  }
  return out;
}

std::vector<JacobiCheck> jacobi_scan() { return jacobi_scan(closure_table()); }

namespace {

// Base polynomial subring generators; the ring is a free module over them.
std::vector<Poly> base_ring(const GeneratorSystem& sys) {
  switch (sys.ring) {
    case RingId::A2:
      return {sys.by_name("S1"), sys.by_name("T1"), sys.by_name("S2"),
              sys.by_name("T2")};
    case RingId::B2:
      return {sys.by_name("S1"), sys.by_name("S2"), sys.by_name("T1"),
              sys.by_name("T2")};
    case RingId::G2:
      return {sys.by_name("S1"), sys.by_name("T1'"), sys.by_name("S2"),
              sys.by_name("T2'")};
  }
  throw std::logic_error("unreachable");
}

std::vector<Poly> default_module_basis(const GeneratorSystem& sys) {
  Poly one = Poly::constant(sys.concrete.at(0).vars(), Rat(1));
  switch (sys.ring) {
    case RingId::A2: {
      Poly H = sys.by_name("H");
      return {one, H, H.pow(2), H.pow(3), sys.by_name("U1"), sys.by_name("U2")};
    }
    case RingId::B2: {
      Poly Z1 = sys.by_name("Z1");
      return {one,          Z1,
              Z1.pow(2),    Z1.pow(3),
              Z1.pow(4),    sys.by_name("Z2"),
              sys.by_name("Z3"), sys.by_name("Z4")};
    }
    case RingId::G2: {
      Poly H = sys.by_name("H");
      Poly Z = sys.by_name("Z");
      return {one,       H,         H.pow(2),  H.pow(3),
              Z,         Z * H,     Z * H.pow(2), Z * H.pow(3),
              sys.by_name("U11"), sys.by_name("U21"), sys.by_name("U12"),
              sys.by_name("U22")};
    }
  }
  throw std::logic_error("unreachable");
}

// Appends every product of powers of the base generators with exact
// bidegree `remaining`, multiplied into acc.
void base_products(const std::vector<Poly>& base,
                   const std::vector<BiDegree>& degs, std::size_t idx,
                   BiDegree remaining, const Poly& acc,
                   std::vector<Poly>& out) {
  if (remaining.xdeg == 0 && remaining.ydeg == 0 && idx == base.size()) {
    out.push_back(acc);
    return;
  }
  if (idx == base.size()) return;
  BiDegree d = degs[idx];
  Poly cur = acc;
  for (int k = 0;; ++k) {
    int rx = remaining.xdeg - k * d.xdeg;
    int ry = remaining.ydeg - k * d.ydeg;
    if (rx < 0 || ry < 0) break;
    base_products(base, degs, idx + 1, BiDegree{rx, ry}, cur, out);
    cur = cur * base[idx];
  }
}

}  // namespace

ModuleBasisReport verify_module_basis(RingId ring, int bound) {
  return verify_module_basis(ring, bound,
                             default_module_basis(generator_system(ring)));
}

ModuleBasisReport verify_module_basis(RingId ring, int bound,
                                      const std::vector<Poly>& module_basis) {
  GeneratorSystem sys = generator_system(ring);
  const CaseSpec& spec = sys.spec;
  std::vector<Poly> base = base_ring(sys);
  std::vector<BiDegree> base_degs;
  for (const Poly& g : base) base_degs.push_back(*g.bidegree());
  std::vector<BiDegree> basis_degs;
  for (const Poly& m : module_basis) basis_degs.push_back(*m.bidegree());

  ModuleBasisReport report;
  report.ok = true;
  for (int d = 0; d <= bound; ++d) {
    for (int i = 0; i <= d; ++i) {
      BiDegree cell{i, d - i};
      std::vector<Poly> products;
      for (std::size_t b = 0; b < module_basis.size(); ++b) {
        int rx = cell.xdeg - basis_degs[b].xdeg;
        int ry = cell.ydeg - basis_degs[b].ydeg;
        if (rx < 0 || ry < 0) continue;
        base_products(base, base_degs, 0, BiDegree{rx, ry}, module_basis[b],
                      products);
      }
      int dim = invariant_dim(spec.action, cell);
      if (products.empty() && dim == 0) continue;
      CellCheck check;
      check.cell = cell;
      check.invariant_dim = dim;
      check.product_count = static_cast<int>(products.size());
      auto monos = monomial_basis(spec.vars, cell);
      MonomialIndex index(monos);
      RowSpace space(static_cast<int>(monos.size()));
      for (const Poly& p : products) space.add(vectorize(p, index));
      check.rank = space.rank();
      check.holds = check.rank == dim && check.product_count == check.rank;
      if (!check.holds) {
        report.ok = false;
        report.failures.push_back(check);
      }
      report.cells.push_back(std::move(check));
    }
  }
  return report;
}

GenerationReport verify_generation(const CaseSpec& spec,
                                   const std::vector<Poly>& generators,
                                   int bound) {
  for (const Poly& g : generators) {
    if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1)
      throw std::invalid_argument(
          "generation check: generators must be homogeneous of positive degree");
    if (!is_invariant(spec, g))
      throw std::invalid_argument("generation check: generator is not invariant");
  }

  struct DegreeState {
    MonomialIndex index;
    RowSpace space;
    int dim;
    DegreeState(const std::vector<Monomial>& monos, int dim_)
        : index(monos), space(static_cast<int>(monos.size())), dim(dim_) {}
  };
  std::map<int, DegreeState> states;
  for (int d = 1; d <= bound; ++d)
    states.emplace(d, DegreeState(monomial_basis(spec.vars, d),
                                  spec.invariant_dim(d)));

  // Multisets of generators as non-decreasing index sequences, products
  // built incrementally.
  auto extend = [&](auto&& self, std::size_t from, const Poly& acc,
                    int degree) -> void {
    for (std::size_t i = from; i < generators.size(); ++i) {
      int nd = degree + generators[i].degree();
      if (nd > bound) continue;
      Poly prod = acc.is_zero() ? generators[i] : acc * generators[i];
      auto& st = states.at(nd);
      if (st.space.rank() < st.dim) st.space.add(vectorize(prod, st.index));
      self(self, i, prod, nd);
    }
  };
  extend(extend, 0, Poly::zero(spec.vars), 0);

  GenerationReport report;
  report.ok = true;
  report.per_degree.push_back({0, 1, 1});  // constants
  for (auto& [d, st] : states) {
    report.per_degree.push_back({d, st.dim, st.space.rank()});
    if (st.space.rank() < st.dim && report.ok) {
      report.ok = false;
      report.first_failing_degree = d;
    }
  }
  return report;
}

}  // namespace poishom

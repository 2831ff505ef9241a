// Command line driver.  One subcommand per library surface:
//   hp0            degree-zero Poisson homology of a case
//   hh0            fixed-point-free conjugacy class count (dim HH0)
//   characters     sl2 character table and pairing obstructions
//   presentations  invariant-ring presentation checks
//   weyl           Weyl algebra commutator identities
//   crosscheck     closed-form series against counted dimensions
// Exit status: 0 when every embedded check passes, 1 when a check fails,
// 2 on bad usage or an impossible request.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "poishom/case_spec.hpp"
#include "poishom/characters.hpp"
#include "poishom/closed_forms.hpp"
#include "poishom/group_action.hpp"
#include "poishom/hp0.hpp"
#include "poishom/presentations.hpp"
#include "poishom/weyl.hpp"

using json = nlohmann::json;
using namespace poishom;

namespace {

struct CaseOptions {
  std::string family;
  int n = 0;
  std::string custom_path;
};

struct OutputOptions {
  std::string format = "text";
  long long seed = 0;
};

void add_case_options(CLI::App* cmd, CaseOptions& opt) {
  auto* fam = cmd->add_option(
      "--case", opt.family, "case family: Cyclic, A2, B2, G2, Pm1, or Z3");
  cmd->add_option("--n", opt.n, "size parameter for Cyclic, Pm1, Z3");
  cmd->add_option("--custom", opt.custom_path,
                  "JSON file describing a custom case")
      ->excludes(fam);
}

void add_output_options(CLI::App* cmd, OutputOptions& opt) {
  cmd->add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", opt.seed, "seed recorded in the report");
}

CaseSpec build_spec(const CaseOptions& opt) {
  if (!opt.custom_path.empty()) return make_custom_file(opt.custom_path);
  if (opt.family.empty())
    throw std::invalid_argument("no case selected: pass --case or --custom");
  return make_case(opt.family, opt.n);
}

// Prints the report, appending the seed and wall time both formats record.
void emit(const OutputOptions& out, json payload, const std::string& text,
          std::chrono::steady_clock::time_point start) {
  long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  if (out.format == "json") {
    payload["seed"] = out.seed;
    payload["elapsed_ms"] = ms;
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << text << "seed: " << out.seed << "\nelapsed: " << ms
              << " ms\n";
  }
}

int run_hp0(const CaseOptions& copt, const OutputOptions& oopt,
            const std::string& mode, int bound, int jobs) {
  auto start = std::chrono::steady_clock::now();
  (void)jobs;  // accepted for interface stability; scans run sequentially
  CaseSpec spec = build_spec(copt);
  if (!mode.empty()) spec.mode = mode_from_name(mode);
  if (bound != 0) {
    if (bound < 2 || bound % 2 != 0)
      throw std::invalid_argument(
          "scan bound must be a positive even integer, got " +
          std::to_string(bound));
    spec.scan_bound = bound;
    spec.paper_scan_bound = bound;
  }
  Hp0Report report = hp0_run(spec);
  bool ok = report.trailing_zeros && report.agreement.value_or(true);
  std::string text = report.text();
  if (!ok) text += "  warning: scan not stabilized or modes disagree\n";
  json j;
  j["report"] = report.to_json();
  j["ok"] = ok;
  emit(oopt, std::move(j), text, start);
  return ok ? 0 : 1;
}

int run_hh0(const CaseOptions& copt, const OutputOptions& oopt) {
  auto start = std::chrono::steady_clock::now();
  CaseSpec spec = build_spec(copt);
  auto classes = conjugacy_classes(spec.action);
  int count = fixed_point_free_class_count(spec.action);
  std::ostringstream os;
  os << "HH0(" << spec.name << ") = " << count << "\n";
  os << "  conjugacy classes: " << classes.size()
     << ", fixed point free: " << count << "\n";
  json j;
  j["case"] = spec.name;
  j["hh0"] = count;
  j["conjugacy_classes"] = classes.size();
  emit(oopt, std::move(j), os.str(), start);
  return 0;
}

int run_characters(const CaseOptions& copt, const OutputOptions& oopt,
                   int bound, const std::vector<int>& pairings) {
  auto start = std::chrono::steady_clock::now();
  CaseSpec spec = build_spec(copt);
  if (bound <= 0)
    throw std::invalid_argument("character bound must be positive");
  for (int k : pairings) {
    if (k < 0)
      throw std::invalid_argument("pairing index must be nonnegative");
    if (bound < 2 * k + 2)
      throw std::invalid_argument(
          "character bound " + std::to_string(bound) +
          " too small for pairing index " + std::to_string(k) +
          " (needs at least " + std::to_string(2 * k + 2) + ")");
  }
  BiDimTable table = bidim_table(spec.action, bound);
  bool ok = true;
  std::ostringstream os;
  os << "characters(" << spec.name << ") bound=" << bound << "\n";
  json jchi = json::array();
  for (int n = 0; n <= bound; ++n) {
    LaurentQ chi = sl2_character(table, n);
    if (!chi.symmetric()) ok = false;
    os << "chi_" << n << " = " << chi.str() << "\n";
    jchi.push_back(chi.str());
  }
  json jp = json::array();
  for (int k : pairings) {
    LaurentQ pc = pairing_character(table, k);
    long long tm = trivial_multiplicity(pc);
    bool obstruction = (tm == 0);
    os << "pairing k=" << k << ": " << pc.str() << "\n";
    os << "  trivial multiplicity: " << tm << ", "
       << (obstruction ? "obstruction holds" : "no obstruction") << "\n";
    jp.push_back({{"k", k},
                  {"character", pc.str()},
                  {"trivial_multiplicity", tm},
                  {"obstruction", obstruction}});
  }
  if (!ok) os << "  warning: a character is not symmetric under q <-> 1/q\n";
  json j;
  j["case"] = spec.name;
  j["bound"] = bound;
  j["chi"] = jchi;
  j["pairings"] = jp;
  j["ok"] = ok;
  emit(oopt, std::move(j), os.str(), start);
  return ok ? 0 : 1;
}

int run_presentations(const std::string& ring_s, const OutputOptions& oopt,
                      int module_bound, int generation_bound) {
  auto start = std::chrono::steady_clock::now();
  RingId ring = ring_from_name(ring_s);
  const GeneratorSystem& sys = generator_system(ring);
  bool ok = true;
  std::ostringstream os;
  os << "presentation(" << ring_name(ring) << ")\n";
  json j;
  j["ring"] = ring_name(ring);

  auto relations = ring_relations(ring);
  auto checks = verify_relations(ring);
  os << "relations:\n";
  json jrel = json::array();
  for (size_t i = 0; i < checks.size(); ++i) {
    const RelationCheck& rc = checks[i];
    const Relation& rel = relations[i];
    bool pass = rc.printed_holds || (rc.has_correction && rc.corrected_holds);
    ok = ok && pass;
    os << "  " << rc.id << ": ";
    if (rc.printed_holds)
      os << "ok\n";
    else if (pass)
      os << "printed form fails (residual " << rc.printed_residual.str()
         << "), corrected form holds\n";
    else
      os << "FAIL (residual " << rc.printed_residual.str() << ")\n";
    json e;
    e["id"] = rc.id;
    e["printed"] = rel.lhs.str() + " = " + rel.printed_rhs.str();
    e["printed_residual"] = rc.printed_residual.str();
    e["printed_holds"] = rc.printed_holds;
    if (rc.has_correction) {
      e["corrected"] = rel.lhs.str() + " = " + rel.corrected_rhs->str();
      e["corrected_residual"] = rc.corrected_residual.str();
      e["corrected_holds"] = rc.corrected_holds;
    }
    jrel.push_back(std::move(e));
  }
  j["relations"] = std::move(jrel);

  // The closure table and its Jacobi scan are specific to the seven
  // degree-<=3 generators of the A2 case.
  if (ring == RingId::A2) {
    auto table_checks = verify_closure_table();
    int tfail = 0;
    json jtf = json::array();
    for (const TableCheck& tc : table_checks) {
      if (!tc.holds) {
        ++tfail;
        os << "  table {" << tc.row << "," << tc.col << "}: residual "
           << tc.residual.str() << "\n";
        jtf.push_back({{"row", tc.row},
                       {"col", tc.col},
                       {"residual", tc.residual.str()}});
      }
    }
    os << "closure table: " << (table_checks.size() - tfail) << "/"
       << table_checks.size() << " entries match\n";
    ok = ok && tfail == 0;
    j["closure_table"] = {{"checked", table_checks.size()},
                          {"failures", std::move(jtf)}};

    auto jac = jacobi_scan();
    int jfail = 0;
    json jjf = json::array();
    for (const JacobiCheck& jc : jac) {
      if (!jc.holds) {
        ++jfail;
        os << "  jacobi (" << jc.a << "," << jc.b << "," << jc.c
           << "): " << jc.jacobiator.str() << "\n";
        jjf.push_back({{"triple", {jc.a, jc.b, jc.c}},
                       {"jacobiator", jc.jacobiator.str()}});
      }
    }
    os << "jacobi identity: " << (jac.size() - jfail) << "/" << jac.size()
       << " triples vanish\n";
    ok = ok && jfail == 0;
    j["jacobi"] = {{"checked", jac.size()}, {"failures", std::move(jjf)}};
  }

  ModuleBasisReport mb = verify_module_basis(ring, module_bound);
  os << "module basis: "
     << (mb.ok ? "free over the base ring" : "NOT free") << " through bound "
     << module_bound << " (" << mb.cells.size() << " cells)\n";
  json jmbf = json::array();
  for (const CellCheck& cc : mb.failures) {
    os << "  cell (" << cc.cell.xdeg << "," << cc.cell.ydeg << "): dim "
       << cc.invariant_dim << ", products " << cc.product_count << ", rank "
       << cc.rank << "\n";
    jmbf.push_back({{"cell", {cc.cell.xdeg, cc.cell.ydeg}},
                    {"dim", cc.invariant_dim},
                    {"products", cc.product_count},
                    {"rank", cc.rank}});
  }
  ok = ok && mb.ok;
  j["module_basis"] = {{"ok", mb.ok},
                       {"bound", module_bound},
                       {"cells", mb.cells.size()},
                       {"failures", std::move(jmbf)}};

  GenerationReport gen = verify_generation(sys.spec, sys.concrete,
                                           generation_bound);
  if (gen.ok)
    os << "generation: invariant dimensions matched through degree "
       << generation_bound << "\n";
  else
    os << "generation: first failure at degree " << gen.first_failing_degree
       << "\n";
  ok = ok && gen.ok;
  json jgpd = json::array();
  for (const auto& row : gen.per_degree)
    jgpd.push_back({row[0], row[1], row[2]});
  j["generation"] = {{"ok", gen.ok},
                     {"bound", generation_bound},
                     {"first_failing_degree", gen.first_failing_degree},
                     {"per_degree", std::move(jgpd)}};

  j["ok"] = ok;
  emit(oopt, std::move(j), os.str(), start);
  return ok ? 0 : 1;
}

int run_weyl(const OutputOptions& oopt, int sum_n, int closed_k) {
  auto start = std::chrono::steady_clock::now();
  if (sum_n < 0 && closed_k <= 0)
    throw std::invalid_argument(
        "weyl: pass --alternating-sum N and/or --closed-form K");
  bool ok = true;
  std::ostringstream os;
  json j;
  if (sum_n >= 0) {
    WeylElement w = alternating_commutator_sum(sum_n);  // throws on even n
    bool pass = (w == WeylElement::one(sum_n).scaled(Rat(2)));
    ok = ok && pass;
    os << "alternating commutator sum, n=" << sum_n << ": " << w.str()
       << "\n";
    os << "  equals the scalar 2: " << (pass ? "yes" : "NO") << "\n";
    j["alternating_sum"] = {{"n", sum_n},
                            {"value", w.str()},
                            {"equals_two", pass}};
  }
  if (closed_k > 0) {
    int k = closed_k;
    std::vector<uint8_t> ones(k, 1), zeros(k, 0);
    WeylElement p = WeylElement::monomial(k, ones, zeros, Rat(1));
    WeylElement q = WeylElement::monomial(k, zeros, ones, Rat(1));
    WeylElement lhs = commutator(p, q);
    WeylElement rhs = ordered_commutator_closed_form(k);
    bool pass = (lhs == rhs);
    ok = ok && pass;
    os << "[p1..p" << k << ", q1..q" << k << "] = " << lhs.str() << "\n";
    os << "  closed form matches: " << (pass ? "yes" : "NO") << "\n";
    j["closed_form"] = {{"k", k},
                        {"commutator", lhs.str()},
                        {"closed_form", rhs.str()},
                        {"matches", pass}};
  }
  j["ok"] = ok;
  emit(oopt, std::move(j), os.str(), start);
  return ok ? 0 : 1;
}

int run_crosscheck(const std::string& ring_s, const OutputOptions& oopt,
                   int bound) {
  auto start = std::chrono::steady_clock::now();
  if (bound <= 0) throw std::invalid_argument("bound must be positive");
  std::vector<RingId> rings;
  if (ring_s.empty()) {
    rings = {RingId::A2, RingId::B2};
  } else {
    RingId r = ring_from_name(ring_s);
    if (r == RingId::G2)
      throw std::invalid_argument("no closed forms are on record for G2");
    rings = {r};
  }
  bool ok = true;
  std::ostringstream os;
  json jrings = json::array();
  for (RingId ring : rings) {
    const GeneratorSystem& sys = generator_system(ring);
    BiDimTable counted = bidim_table(sys.spec.action, bound);
    os << "crosscheck " << ring_name(ring) << ", bound " << bound << "\n";
    json jr;
    jr["ring"] = ring_name(ring);
    json jh = json::array();
    for (const ClosedForm& cf : hilbert_closed_forms(ring)) {
      BiDimTable expanded = expand_rational(cf.numer, cf.denom, bound);
      int mismatches = 0;
      BiDegree first{-1, -1};
      for (int a = 0; a <= bound; ++a)
        for (int b = 0; a + b <= bound; ++b)
          if (expanded.at(a, b) != counted.at(a, b)) {
            if (mismatches == 0) first = {a, b};
            ++mismatches;
          }
      bool pass = (mismatches == 0);
      ok = ok && pass;
      os << "  dimension series (" << cf.label << "): ";
      if (pass)
        os << "agrees on every bidegree\n";
      else
        os << mismatches << " mismatches, first at (" << first.xdeg << ","
           << first.ydeg << ")\n";
      jh.push_back({{"label", cf.label}, {"agrees", pass}});
    }
    jr["dimension_series"] = std::move(jh);
    ClosedForm ch = character_closed_form(ring);
    auto chis = expand_char_series(ch.numer, ch.denom, bound);
    int bad = -1;
    for (int n = 0; n <= bound && n < static_cast<int>(chis.size()); ++n)
      if (!(chis[n] == sl2_character(counted, n))) {
        bad = n;
        break;
      }
    bool cpass = (bad < 0);
    ok = ok && cpass;
    os << "  character series: ";
    if (cpass)
      os << "chi_0..chi_" << bound << " agree\n";
    else
      os << "first mismatch at chi_" << bad << "\n";
    jr["character_series"] = {{"label", ch.label}, {"agrees", cpass}};
    jrings.push_back(std::move(jr));
  }
  json j;
  j["bound"] = bound;
  j["rings"] = std::move(jrings);
  j["ok"] = ok;
  emit(oopt, std::move(j), os.str(), start);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact invariants of finite symplectic group actions: Poisson "
      "homology in degree zero, Hochschild counts, sl2 characters, "
      "invariant-ring presentations, Weyl algebra identities",
      "poishom"};
  app.require_subcommand(1);

  CaseOptions hp0_case, hh0_case, chr_case;
  OutputOptions hp0_out, hh0_out, chr_out, pres_out, weyl_out, cross_out;

  auto* c_hp0 =
      app.add_subcommand("hp0", "degree-zero Poisson homology of a case");
  add_case_options(c_hp0, hp0_case);
  std::string hp0_mode;
  int hp0_bound = 0, hp0_jobs = 1;
  c_hp0->add_option("--mode", hp0_mode,
                    "bruteforce, paper, or both (default: case preset)")
      ->check(CLI::IsMember({"bruteforce", "paper", "both"}));
  c_hp0->add_option("--bound", hp0_bound,
                    "degree scan bound (default: case preset)");
  c_hp0->add_option("--jobs", hp0_jobs,
                    "worker count hint (scans run sequentially)")
      ->check(CLI::Range(1, 256));
  add_output_options(c_hp0, hp0_out);

  auto* c_hh0 = app.add_subcommand(
      "hh0", "fixed-point-free conjugacy class count (dim HH0)");
  add_case_options(c_hh0, hh0_case);
  add_output_options(c_hh0, hh0_out);

  auto* c_chr = app.add_subcommand(
      "characters", "sl2 character table and pairing obstructions");
  add_case_options(c_chr, chr_case);
  int chr_bound = 12;
  std::vector<int> chr_pairings;
  c_chr->add_option("--bound", chr_bound, "top character degree (default 12)");
  c_chr->add_option("--pairing", chr_pairings,
                    "pairing index k to test for the trivial obstruction "
                    "(repeatable)");
  add_output_options(c_chr, chr_out);

  auto* c_pres = app.add_subcommand(
      "presentations", "invariant-ring presentation checks");
  std::string pres_ring;
  int pres_module_bound = 10, pres_generation_bound = 12;
  c_pres->add_option("--ring", pres_ring, "A2, B2, or G2")->required();
  c_pres->add_option("--module-bound", pres_module_bound,
                     "bidegree bound for the module-basis check (default 10)");
  c_pres->add_option("--generation-bound", pres_generation_bound,
                     "degree bound for the generation check (default 12)");
  add_output_options(c_pres, pres_out);

  auto* c_weyl =
      app.add_subcommand("weyl", "Weyl algebra commutator identities");
  int weyl_sum_n = -1, weyl_closed_k = 0;
  c_weyl->add_option("--alternating-sum", weyl_sum_n,
                     "check the signed commutator sum over n pairs equals 2 "
                     "(n odd)");
  c_weyl->add_option("--closed-form", weyl_closed_k,
                     "check the closed form of [p1..pk, q1..qk]");
  add_output_options(c_weyl, weyl_out);

  auto* c_cross = app.add_subcommand(
      "crosscheck", "closed-form series against counted dimensions");
  std::string cross_ring;
  int cross_bound = 12;
  c_cross->add_option("--ring", cross_ring, "A2 or B2 (default: both)");
  c_cross->add_option("--bound", cross_bound,
                      "total degree bound (default 12)");
  add_output_options(c_cross, cross_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (c_hp0->parsed())
      return run_hp0(hp0_case, hp0_out, hp0_mode, hp0_bound, hp0_jobs);
    if (c_hh0->parsed()) return run_hh0(hh0_case, hh0_out);
    if (c_chr->parsed())
      return run_characters(chr_case, chr_out, chr_bound, chr_pairings);
    if (c_pres->parsed())
      return run_presentations(pres_ring, pres_out, pres_module_bound,
                               pres_generation_bound);
    if (c_weyl->parsed()) return run_weyl(weyl_out, weyl_sum_n, weyl_closed_k);
    if (c_cross->parsed())
      return run_crosscheck(cross_ring, cross_out, cross_bound);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

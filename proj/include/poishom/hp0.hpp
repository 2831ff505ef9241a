#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "poishom/case_spec.hpp"

namespace poishom {

// Result of a degree-zero Poisson homology computation over a degree range.
struct Hp0Report {
  std::string case_name;
  std::string mode;
  int scan_bound = 0;
  int trailing_zero_window = 0;
  std::map<int, int> per_degree;  // degree -> dim S^G(d) / bracket span
  long long total = 0;
  bool trailing_zeros = false;  // the last window degrees all vanish
  std::optional<bool> agreement;  // both-mode comparison on the shared range
  std::vector<int> escalated;  // degrees the shortcut handed to the full scan

  nlohmann::json to_json() const;
  static Hp0Report from_json(const nlohmann::json& j);
  std::string text() const;
};

// Dimension of S^G(d) / ({S^G, S^G} cap degree d).
int cokernel_dim(const CaseSpec& spec, int degree);

// Every bracket {u, v} of invariant-basis pairs with deg u + deg v - 2 equal
// to the given degree, vectorized over the full degree-d monomial basis in
// the canonical (deg u, u index, v index) order. Zero brackets are dropped.
// Mainly for tests and cross-checks; the scan itself works blockwise.
std::vector<SparseRow> bracket_span_rows(const CaseSpec& spec, int degree);

// Membership of an invariant homogeneous polynomial in the bracket span of
// its degree. Throws std::invalid_argument on zero, inhomogeneous, or
// non-invariant input.
bool in_bracket_span(const CaseSpec& spec, const Poly& f);

// Whether a homogeneous polynomial is invariant under the case's action.
bool is_invariant(const CaseSpec& spec, const Poly& f);

// Span membership of p and of p*q. p inside the span with p*q outside
// witnesses that the span is not an ideal of S^G.
struct IdealProbe {
  bool p_in_span = false;
  bool pq_in_span = false;
  bool witnesses_non_ideal() const { return p_in_span && !pq_in_span; }
};
IdealProbe ideal_probe(const CaseSpec& spec, const Poly& p, const Poly& q);

Hp0Report hp0_scan(const CaseSpec& spec);        // per-degree full cokernels
Hp0Report hp0_paper_mode(const CaseSpec& spec);  // certificates / weight blocks
Hp0Report hp0_run(const CaseSpec& spec);         // dispatch on spec.mode

}  // namespace poishom

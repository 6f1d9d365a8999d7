#pragma once

#include <array>
#include <optional>
#include <vector>

#include "kkdrop/kk.hpp"

namespace kkdrop {

// The one-parameter family (b0*x - d*m1)*delta0 + (b1*x + d*m0)*delta1 with
// (b0, b1) the canonical Bezout pair; requires 0 <= d < m/(m0*m1).
KKElement family_element(const DimensionDropAlgebra& a,
                         const DimensionDropAlgebra& b, Int x, Int d);

// Same element with the delta0 coefficient reduced into [0, m/m0) using
// (m/m0)*delta0 == (m/m1)*delta1; this is the representative searched by
// search_counterexamples and audit_claims, where strict-mode span verdicts
// depend on the representative chosen.
KKElement reduced_family_element(const DimensionDropAlgebra& a,
                                 const DimensionDropAlgebra& b, Int x, Int d);

struct DlWitness {
  int generator_index;  // 0..3 in cone_generators order
  GpElement image;
};

struct DlResult {
  bool positive = false;
  std::optional<DlWitness> witness;  // failing generator, when not positive
};

// Order preservation of the induced triple at modulus p: images of all four
// source cone generators must be positive on the target side.
DlResult dl_positive(const KKElement& e, Int p);

struct ClosedFormResult {
  bool positive = false;
  Int lhs0 = 0;  // b0*m0*m0*x
  Int lhs1 = 0;  // b0*m0*m1*x
  Int r = 0;     // lhs0 mod m
  Int s = 0;     // lhs1 mod m
};

// Closed-form order test for the x-family (d = 0): positive iff x == 0 or
// (m0*x >= R and m1*x >= S and, when b0*m0 > 1, lhs0 >= m and lhs1 >= m).
// The magnitude bounds are consequences of cone positivity only when
// b0*m0 > 1, so they are skipped at a classical left endpoint (m0 == 1).
ClosedFormResult dl_closed_form(const DimensionDropAlgebra& a, Int x);

// Action on K-homology: images of the target classes [V0] and [V1] as
// source-side classes, extended linearly from the four basic patterns.
std::pair<KHomologyClass, KHomologyClass> js_action(const KKElement& e);

// Liftability by positivity of both K-homology images.
bool js_liftable(const KKElement& e);

// First (lexicographic) tuple (a, b, c, e') >= 0 with
// a*m0 + b*m1 + c*m/gcd(m,n) + e'*m/gcd(gcd(m,n), m/(m0*m1)) equal to the
// K0 multiplicity of e whose combination of basic classes is kk_equal to e.
std::optional<std::array<Int, 4>> span_member(const KKElement& e, Int p,
                                              EqualityMode mode);

struct LiftReport {
  KKElement element;
  Int p;
  EqualityMode mode;
  bool dl_pos;
  std::optional<DlWitness> dl_witness;
  bool js_pos;
  KHomologyClass js_image_v0;
  KHomologyClass js_image_v1;
  std::optional<std::array<Int, 4>> span_witness;
  bool agree_dl_span;
  bool agree_js_span;
};

// Runs all three checkers and cross-validates them: a span witness must
// recombine (kk_equal) to the element and implies js positivity; violations
// raise InternalError.
LiftReport lift_report(const KKElement& e, Int p, EqualityMode mode);

struct SearchHit {
  Int x;
  Int d;
  LiftReport report;
};

// Sweeps reduced family elements with x in [0, min(x_max, m-1)] (elements
// with x >= m always lie in the non-negative span and are pruned) and
// d = 0, or d in [0, m/(m0*m1)) when include_torsion is set; returns the
// ones that preserve order yet have no span witness, ordered by (x, d).
std::vector<SearchHit> search_counterexamples(const DimensionDropAlgebra& a,
                                              const DimensionDropAlgebra& b,
                                              Int p, Int x_max,
                                              bool include_torsion,
                                              EqualityMode mode);

struct AuditRow {
  Int x;
  std::array<Int, 2> reduced_coeffs;  // delta0/delta1 after reduction
  ClosedFormResult closed_form;
  bool dl_pos;
  bool js_pos;
  std::optional<std::array<Int, 4>> span_map;
  std::optional<std::array<Int, 4>> span_strict;
};

struct AuditReport {
  DimensionDropAlgebra algebra;
  Int p;
  BezoutPair beta;
  std::vector<AuditRow> rows;              // x in {1, 2, 3, 5}
  std::array<const char*, 2> claims;       // the two published claims
  std::vector<Int> map_candidates;         // search x <= 11, d = 0
  std::vector<Int> strict_candidates;
};

// Fixed scenario: I[2,12,3] -> I[2,12,3] at p = 12, beta = (2, -1).
// Recomputes every verdict the published counterexample discussion rests on
// and quotes the two claims it checks, side by side, without adjudicating.
AuditReport audit_claims();

}  // namespace kkdrop

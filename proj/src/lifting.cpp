#include "kkdrop/lifting.hpp"

#include <string>

namespace kkdrop {

KKElement family_element(const DimensionDropAlgebra& a,
                         const DimensionDropAlgebra& b, Int x, Int d) {
  require_full_coprime(a, "family_element");
  if (d < 0 || d >= k1_order(a))
    fail(Errc::BadTorsionIndex,
         "torsion parameter " + std::to_string(d) + " out of range");
  BezoutPair beta = bezout_canonical(a.m0(), a.m1());
  Int c0 = checked_sub(checked_mul(beta.beta0, x), checked_mul(d, a.m1()));
  Int c1 = checked_add(checked_mul(beta.beta1, x), checked_mul(d, a.m0()));
  return make_kk_element(a, b, {c0, c1, 0, 0});
}

KKElement reduced_family_element(const DimensionDropAlgebra& a,
                                 const DimensionDropAlgebra& b, Int x,
                                 Int d) {
  KKElement e = family_element(a, b, x, d);
  Int r0 = a.m() / a.m0();
  Int r1 = a.m() / a.m1();
  Int q = floor_div(e.coeffs[0], r0);
  return make_kk_element(a, b,
                         {e.coeffs[0] - checked_mul(q, r0),
                          checked_add(e.coeffs[1], checked_mul(q, r1)), 0, 0});
}

DlResult dl_positive(const KKElement& e, Int p) {
  KTriple t = induced_triple(e, p);
  std::array<GpElement, 4> gens = cone_generators(e.source, p);
  for (int i = 0; i < 4; ++i) {
    GpElement image = apply_triple(t, gens[i]);
    if (!is_positive(image)) return {false, DlWitness{i, image}};
  }
  return {true, std::nullopt};
}

ClosedFormResult dl_closed_form(const DimensionDropAlgebra& a, Int x) {
  require_full_coprime(a, "dl_closed_form");
  if (x < 0) fail(Errc::NotPositive, "closed form requires x >= 0");
  BezoutPair beta = bezout_canonical(a.m0(), a.m1());
  ClosedFormResult out;
  out.lhs0 = checked_mul(checked_mul(beta.beta0, a.m0()),
                         checked_mul(a.m0(), x));
  out.lhs1 = checked_mul(checked_mul(beta.beta0, a.m0()),
                         checked_mul(a.m1(), x));
  out.r = floor_mod(out.lhs0, a.m());
  out.s = floor_mod(out.lhs1, a.m());
  bool remainders_ok = checked_mul(a.m0(), x) >= out.r &&
                       checked_mul(a.m1(), x) >= out.s;
  bool magnitudes_ok =
      a.m0() == 1 || (out.lhs0 >= a.m() && out.lhs1 >= a.m());
  out.positive = x == 0 || (remainders_ok && magnitudes_ok);
  return out;
}

std::pair<KHomologyClass, KHomologyClass> js_action(const KKElement& e) {
  Int m0 = e.source.m0(), m1 = e.source.m1();
  Int m = e.source.m(), n = e.target.m();
  Int g = gcd(m, n);
  Int q1 = checked_mul(m, m0) / gcd(checked_mul(m1, g), m / m0);
  Int q0 = checked_mul(m, m1) / gcd(checked_mul(m0, g), m / m1);
  // Images of [V0], [V1] under the four basic patterns, as (u, v) pairs
  // over the source algebra.
  const Int action[4][2][2] = {{{m0, 0}, {m1, 0}},
                               {{0, m0}, {0, m1}},
                               {{m / g, 0}, {0, m / g}},
                               {{0, q1}, {q0, 0}}};
  KHomologyClass v0{e.source, 0, 0};
  KHomologyClass v1{e.source, 0, 0};
  for (int i = 0; i < 4; ++i) {
    v0.u = checked_add(v0.u, checked_mul(e.coeffs[i], action[i][0][0]));
    v0.v = checked_add(v0.v, checked_mul(e.coeffs[i], action[i][0][1]));
    v1.u = checked_add(v1.u, checked_mul(e.coeffs[i], action[i][1][0]));
    v1.v = checked_add(v1.v, checked_mul(e.coeffs[i], action[i][1][1]));
  }
  return {v0, v1};
}

bool js_liftable(const KKElement& e) {
  auto [v0, v1] = js_action(e);
  return khomology_positive(v0) && khomology_positive(v1);
}

std::optional<std::array<Int, 4>> span_member(const KKElement& e, Int p,
                                              EqualityMode mode) {
  induced_triple(e, p);  // validates the moduli for the requested p
  const Int pstar = lcm(e.source.m(), e.target.m());
  const KTriple target = induced_triple(e, pstar);
  const Int total = target.x;
  if (total < 0) return std::nullopt;

  static constexpr HomKind kKinds[4] = {HomKind::Delta0, HomKind::Delta1,
                                        HomKind::Id, HomKind::IdBar};
  std::array<KTriple, 4> basic = {
      induced_triple(make_basic_hom(kKinds[0], e.source, e.target), pstar),
      induced_triple(make_basic_hom(kKinds[1], e.source, e.target), pstar),
      induced_triple(make_basic_hom(kKinds[2], e.source, e.target), pstar),
      induced_triple(make_basic_hom(kKinds[3], e.source, e.target), pstar)};

  // The candidate x always matches by the weight equation, and validity
  // forces the g1 image, so equality reduces to linear congruences: the g2
  // image plus y mod s (map mode) or all four entries plus exact y (strict).
  const Int sb = k1_order(e.target);
  const ResiduePair g2 = generator_g2(e.source, pstar);
  Int vb[4], vc[4], vy[4];
  Int ent[4][4];
  for (int i = 0; i < 4; ++i) {
    ResiduePair image = apply_phi(basic[i], g2);
    vb[i] = image.b;
    vc[i] = image.c;
    vy[i] = basic[i].y;
    for (int r = 0; r < 2; ++r)
      for (int col = 0; col < 2; ++col) ent[i][2 * r + col] = basic[i].phi[r][col];
  }
  ResiduePair tg2 = apply_phi(target, g2);

  auto matches = [&](Int a, Int b, Int c, Int ep) {
    Int y = a * vy[0] + b * vy[1] + c * vy[2] + ep * vy[3];
    if (mode == EqualityMode::Map) {
      if (floor_mod(y - target.y, sb) != 0) return false;
      Int ib = a * vb[0] + b * vb[1] + c * vb[2] + ep * vb[3];
      Int ic = a * vc[0] + b * vc[1] + c * vc[2] + ep * vc[3];
      return floor_mod(ib - tg2.b, pstar) == 0 &&
             floor_mod(ic - tg2.c, pstar) == 0;
    }
    if (y != target.y) return false;
    for (int k = 0; k < 4; ++k) {
      Int entry = a * ent[0][k] + b * ent[1][k] + c * ent[2][k] + ep * ent[3][k];
      if (floor_mod(entry, pstar) != target.phi[k / 2][k % 2]) return false;
    }
    return true;
  };

  const Int w0 = basic[0].x, w1 = basic[1].x, w2 = basic[2].x,
            w3 = basic[3].x;
  for (Int a = 0; a * w0 <= total; ++a)
    for (Int b = 0; a * w0 + b * w1 <= total; ++b)
      for (Int c = 0; a * w0 + b * w1 + c * w2 <= total; ++c) {
        Int rest = total - a * w0 - b * w1 - c * w2;
        if (rest % w3 != 0) continue;
        Int ep = rest / w3;
        if (!matches(a, b, c, ep)) continue;
        std::array<Int, 4> witness = {a, b, c, ep};
        if (!kk_equal(make_kk_element(e.source, e.target, witness), e, mode))
          throw InternalError("span witness fails to recombine");
        return witness;
      }
  return std::nullopt;
}

LiftReport lift_report(const KKElement& e, Int p, EqualityMode mode) {
  DlResult dl = dl_positive(e, p);
  auto [v0, v1] = js_action(e);
  bool js = khomology_positive(v0) && khomology_positive(v1);
  std::optional<std::array<Int, 4>> witness = span_member(e, p, mode);
  if (witness && !js)
    throw InternalError("span witness contradicts K-homology positivity");
  LiftReport report{e,  p,  mode, dl.positive, dl.witness, js,
                    v0, v1, witness, dl.positive == witness.has_value(),
                    js == witness.has_value()};
  return report;
}

std::vector<SearchHit> search_counterexamples(const DimensionDropAlgebra& a,
                                              const DimensionDropAlgebra& b,
                                              Int p, Int x_max,
                                              bool include_torsion,
                                              EqualityMode mode) {
  if (x_max < 0) fail(Errc::NotPositive, "search bound must be >= 0");
  std::vector<SearchHit> hits;
  Int x_stop = std::min(x_max, a.m() - 1);
  Int d_stop = include_torsion ? k1_order(a) : 1;
  for (Int x = 0; x <= x_stop; ++x)
    for (Int d = 0; d < d_stop; ++d) {
      KKElement e = reduced_family_element(a, b, x, d);
      LiftReport report = lift_report(e, p, mode);
      if (report.dl_pos && !report.span_witness)
        hits.push_back({x, d, std::move(report)});
    }
  return hits;
}

AuditReport audit_claims() {
  DimensionDropAlgebra algebra(2, 12, 3);
  const Int p = 12;
  AuditReport report{algebra,
                     p,
                     bezout_canonical(2, 3),
                     {},
                     {"take x=2, then 4*delta0 - 2*delta1 preserves the "
                      "Dadarlat-Loring order structure but can not be lifted "
                      "to a homomorphism",
                      "x=3 and x=5 are all the possibilities"},
                     {},
                     {}};
  for (Int x : {Int(1), Int(2), Int(3), Int(5)}) {
    KKElement e = reduced_family_element(algebra, algebra, x, 0);
    AuditRow row;
    row.x = x;
    row.reduced_coeffs = {e.coeffs[0], e.coeffs[1]};
    row.closed_form = dl_closed_form(algebra, x);
    row.dl_pos = dl_positive(e, p).positive;
    row.js_pos = js_liftable(e);
    row.span_map = span_member(e, p, EqualityMode::Map);
    row.span_strict = span_member(e, p, EqualityMode::Strict);
    report.rows.push_back(row);
  }
  for (const SearchHit& hit :
       search_counterexamples(algebra, algebra, p, 11, false,
                              EqualityMode::Map))
    report.map_candidates.push_back(hit.x);
  for (const SearchHit& hit :
       search_counterexamples(algebra, algebra, p, 11, false,
                              EqualityMode::Strict))
    report.strict_candidates.push_back(hit.x);
  return report;
}

}  // namespace kkdrop

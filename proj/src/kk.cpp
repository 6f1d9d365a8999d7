#include "kkdrop/kk.hpp"

#include <set>

namespace kkdrop {

KKElement make_kk_element(const DimensionDropAlgebra& source,
                          const DimensionDropAlgebra& target,
                          const std::array<Int, 4>& coeffs) {
  if (source.m0() != target.m0() || source.m1() != target.m1())
    fail(Errc::AlgebraMismatch,
         "KK elements require matching endpoint sizes");
  require_full_coprime(source, "make_kk_element");
  require_full_coprime(target, "make_kk_element");
  return KKElement{source, target, coeffs};
}

KTriple induced_triple(const KKElement& e, Int p) {
  static constexpr HomKind kKinds[4] = {HomKind::Delta0, HomKind::Delta1,
                                        HomKind::Id, HomKind::IdBar};
  KTriple sum = zero_triple(e.source, e.target, p);
  for (int i = 0; i < 4; ++i) {
    if (e.coeffs[i] == 0) continue;
    KTriple basic = induced_triple(make_basic_hom(kKinds[i], e.source,
                                                  e.target),
                                   p);
    sum = triple_add(sum, triple_scale(basic, e.coeffs[i]));
  }
  return sum;
}

bool kk_equal(const KKElement& a, const KKElement& b, EqualityMode mode) {
  if (!(a.source == b.source) || !(a.target == b.target))
    fail(Errc::Mismatch, "KK elements live over different algebra pairs");
  Int p = lcm(a.source.m(), a.target.m());
  return triples_equal(induced_triple(a, p), induced_triple(b, p), mode);
}

KKCanonicalForm kk_canonical(const KKElement& e) {
  Int p = lcm(e.source.m(), e.target.m());
  KTriple t = induced_triple(e, p);
  TripleDecomposition dec = decompose_triple(t);
  KKCanonicalForm out;
  out.x = t.x;
  out.y_mod = floor_mod(t.y, k1_order(e.target));
  out.d = dec.d;
  out.k = dec.k;
  out.c0 = dec.c0;
  out.c1 = dec.c1;
  return out;
}

Int count_torsion_triples(const DimensionDropAlgebra& a,
                          const DimensionDropAlgebra& b, Int p,
                          EqualityMode mode) {
  require_full_coprime(a, "count_torsion_triples");
  require_full_coprime(b, "count_torsion_triples");
  if (p % a.m() != 0 || p % b.m() != 0)
    fail(Errc::ModulusNotMultiple,
         "census modulus must be a multiple of both interior sizes");
  ResiduePair g1 = generator_g1(a, p);
  ResiduePair g2 = generator_g2(a, p);
  std::set<std::array<Int, 4>> seen;
  PhiMatrix phi;
  for (phi[0][0] = 0; phi[0][0] < p; ++phi[0][0])
    for (phi[0][1] = 0; phi[0][1] < p; ++phi[0][1])
      for (phi[1][0] = 0; phi[1][0] < p; ++phi[1][0])
        for (phi[1][1] = 0; phi[1][1] < p; ++phi[1][1]) {
          KTriple t{a, b, p, 0, phi, 0};
          if (!validate_triple(t).ok) continue;
          if (mode == EqualityMode::Strict) {
            seen.insert({phi[0][0], phi[0][1], phi[1][0], phi[1][1]});
          } else {
            ResiduePair i1 = apply_phi(t, g1);
            ResiduePair i2 = apply_phi(t, g2);
            seen.insert({i1.b, i1.c, i2.b, i2.c});
          }
        }
  return static_cast<Int>(seen.size());
}

KKGroupInfo kk_group_info(const DimensionDropAlgebra& a,
                          const DimensionDropAlgebra& b, EqualityMode mode) {
  require_full_coprime(a, "kk_group_info");
  require_full_coprime(b, "kk_group_info");
  KKGroupInfo info;
  info.free_rank = 1;
  info.formula_torsion = {gcd(b.m(), a.m()), k1_order(a)};
  info.enumerated_torsion_count =
      count_torsion_triples(a, b, lcm(a.m(), b.m()), mode);
  info.counts_agree =
      info.enumerated_torsion_count ==
      checked_mul(info.formula_torsion.first, info.formula_torsion.second);
  return info;
}

}  // namespace kkdrop

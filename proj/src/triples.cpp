#include "kkdrop/triples.hpp"

#include <string>

namespace kkdrop {

namespace {

std::string pair_str(ResiduePair v) {
  return "(" + std::to_string(v.b) + "," + std::to_string(v.c) + ")";
}

void require_compatible(const DimensionDropAlgebra& a,
                        const DimensionDropAlgebra& b) {
  if (a.m0() != b.m0() || a.m1() != b.m1())
    fail(Errc::AlgebraMismatch,
         "source and target must share endpoint sizes");
}

void require_moduli(const DimensionDropAlgebra& a,
                    const DimensionDropAlgebra& b, Int p) {
  if (p < 2) fail(Errc::BadModulus, "triple modulus must be at least 2");
  if (p % a.m() != 0 || p % b.m() != 0)
    fail(Errc::ModulusNotMultiple,
         "triple modulus must be a multiple of both interior sizes");
}

}  // namespace

const char* equality_mode_name(EqualityMode mode) {
  return mode == EqualityMode::Map ? "map" : "strict";
}

KTriple make_triple(const DimensionDropAlgebra& source,
                    const DimensionDropAlgebra& target, Int p, Int x,
                    const PhiMatrix& phi, Int y) {
  require_compatible(source, target);
  require_full_coprime(source, "make_triple");
  require_full_coprime(target, "make_triple");
  require_moduli(source, target, p);
  PhiMatrix canon;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) canon[i][j] = canonical_residue(phi[i][j], p);
  return KTriple{source, target, p, x, canon, y};
}

KTriple zero_triple(const DimensionDropAlgebra& source,
                    const DimensionDropAlgebra& target, Int p) {
  return make_triple(source, target, p, 0, PhiMatrix{{{0, 0}, {0, 0}}}, 0);
}

ResiduePair generator_g1(const DimensionDropAlgebra& a, Int p) {
  return {canonical_residue(a.m0(), p), canonical_residue(a.m1(), p)};
}

ResiduePair generator_g2(const DimensionDropAlgebra& a, Int p) {
  if (p % a.m() != 0)
    fail(Errc::ModulusNotMultiple,
         "pair group generators need m to divide the modulus");
  return {0, canonical_residue(checked_mul(p / a.m(), a.m1()), p)};
}

ResiduePair apply_phi(const KTriple& t, ResiduePair v) {
  Int b = checked_add(checked_mul(t.phi[0][0], v.b),
                      checked_mul(t.phi[0][1], v.c));
  Int c = checked_add(checked_mul(t.phi[1][0], v.b),
                      checked_mul(t.phi[1][1], v.c));
  return {canonical_residue(b, t.p), canonical_residue(c, t.p)};
}

GpElement apply_triple(const KTriple& t, const GpElement& e) {
  if (!(e.algebra == t.source) || e.p != t.p)
    fail(Errc::Mismatch, "element does not live over the triple's source");
  ResiduePair image = apply_phi(t, {e.b, e.c});
  return make_gp_element(t.target, t.p, checked_mul(t.x, e.a), image.b,
                         image.c);
}

ValidationResult validate_triple(const KTriple& t) {
  require_compatible(t.source, t.target);
  require_moduli(t.source, t.target, t.p);
  const Int m0 = t.source.m0();
  const Int m1 = t.source.m1();
  const Int sa = k1_order(t.source);
  const Int sb = k1_order(t.target);

  ResiduePair g1 = generator_g1(t.source, t.p);
  ResiduePair g2 = generator_g2(t.source, t.p);
  ResiduePair image1 = apply_phi(t, g1);
  ResiduePair image2 = apply_phi(t, g2);

  ResiduePair expected1 = {canonical_residue(checked_mul(t.x, m0), t.p),
                           canonical_residue(checked_mul(t.x, m1), t.p)};
  if (image1 != expected1)
    return {false, "first square: phi" + pair_str(g1) + " = " +
                       pair_str(image1) + ", expected " + pair_str(expected1)};

  if (floor_mod(checked_mul(t.y, sa), sb) != 0)
    return {false, "K1 multiplicity " + std::to_string(t.y) +
                       " is not well defined on Z_" + std::to_string(sa)};

  ResiduePair gens[2] = {g1, g2};
  ResiduePair images[2] = {image1, image2};
  for (int i = 0; i < 2; ++i) {
    if (!coeff_pair_member(t.target, t.p, images[i].b, images[i].c))
      return {false, "second square: phi" + pair_str(gens[i]) +
                         " leaves the target pair group"};
    Int lhs = bockstein_nu(t.target, t.p, images[i]);
    Int rhs = floor_mod(
        checked_mul(t.y, bockstein_nu(t.source, t.p, gens[i])), sb);
    if (lhs != rhs)
      return {false, "second square: nu(phi" + pair_str(gens[i]) + ") = " +
                         std::to_string(lhs) + ", expected " +
                         std::to_string(rhs)};
  }
  return {};
}

bool triples_equal(const KTriple& s, const KTriple& t, EqualityMode mode) {
  if (!(s.source == t.source) || !(s.target == t.target) || s.p != t.p)
    fail(Errc::Mismatch, "triples live over different data");
  if (s.x != t.x) return false;
  if (mode == EqualityMode::Strict) return s.phi == t.phi && s.y == t.y;
  ResiduePair g1 = generator_g1(s.source, s.p);
  ResiduePair g2 = generator_g2(s.source, s.p);
  if (apply_phi(s, g1) != apply_phi(t, g1)) return false;
  if (apply_phi(s, g2) != apply_phi(t, g2)) return false;
  return floor_mod(s.y - t.y, k1_order(s.target)) == 0;
}

KTriple induced_triple(const BasicHom& h, Int p) {
  const Int m0 = h.source.m0();
  const Int m1 = h.source.m1();
  const Int m = h.source.m();
  const Int n = h.target.m();
  switch (h.kind) {
    case HomKind::Delta0:
      return make_triple(h.source, h.target, p, m0,
                         PhiMatrix{{{m0, 0}, {m1, 0}}}, 0);
    case HomKind::Delta1:
      return make_triple(h.source, h.target, p, m1,
                         PhiMatrix{{{0, m0}, {0, m1}}}, 0);
    case HomKind::Id: {
      Int g = gcd(m, n);
      return make_triple(h.source, h.target, p, m / g,
                         PhiMatrix{{{m / g, 0}, {0, m / g}}}, n / g);
    }
    case HomKind::IdBar: {
      Int g = gcd(m, n);
      Int h2 = gcd(g, k1_order(h.source));
      Int upper = checked_mul(m, m0) / gcd(checked_mul(m1, g), m / m0);
      Int lower = checked_mul(m, m1) / gcd(checked_mul(m0, g), m / m1);
      return make_triple(h.source, h.target, p, m / h2,
                         PhiMatrix{{{0, upper}, {lower, 0}}}, -(n / h2));
    }
  }
  fail(Errc::Mismatch, "unknown homomorphism kind");
}

PhiMatrix torsion_matrix(const DimensionDropAlgebra& a) {
  Int m0 = a.m0(), m1 = a.m1();
  return {{{-checked_mul(m1, m0), checked_mul(m0, m0)},
           {-checked_mul(m1, m1), checked_mul(m0, m1)}}};
}

Int torsion_param(const KTriple& t) {
  if (t.x != 0)
    fail(Errc::NotTorsionForm, "torsion triples have zero K0 multiplicity");
  if (floor_mod(t.y, k1_order(t.target)) != 0)
    fail(Errc::NotTorsionForm, "torsion triples have vanishing K1 action");
  PhiMatrix base = torsion_matrix(t.source);
  for (Int d = 0; d < k1_order(t.source); ++d) {
    PhiMatrix scaled;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) scaled[i][j] = checked_mul(d, base[i][j]);
    KTriple candidate = make_triple(t.source, t.target, t.p, 0, scaled, 0);
    if (triples_equal(t, candidate, EqualityMode::Map)) return d;
  }
  fail(Errc::NotTorsionForm, "no torsion parameter matches the triple");
}

KTriple build_x_triple(const DimensionDropAlgebra& a,
                       const DimensionDropAlgebra& b, Int p, Int x) {
  require_full_coprime(a, "build_x_triple");
  BezoutPair beta = bezout_canonical(a.m0(), a.m1());
  Int m0 = a.m0(), m1 = a.m1();
  PhiMatrix sigma = {{{checked_mul(checked_mul(m0, beta.beta0), x),
                       checked_mul(checked_mul(m0, beta.beta1), x)},
                      {checked_mul(checked_mul(m1, beta.beta0), x),
                       checked_mul(checked_mul(m1, beta.beta1), x)}}};
  return make_triple(a, b, p, x, sigma, 0);
}

KTriple build_y_triple(const DimensionDropAlgebra& a,
                       const DimensionDropAlgebra& b, Int p, Int y) {
  require_full_coprime(a, "build_y_triple");
  require_full_coprime(b, "build_y_triple");
  Int m = a.m(), n = b.m();
  if (checked_mul(m, y) % n != 0)
    fail(Errc::BadMultiplicity,
         "K1 multiplicity " + std::to_string(y) + " is not well defined");
  Int q = checked_mul(m, y) / n;
  BezoutPair beta = bezout_canonical(a.m0(), a.m1());
  Int m0 = a.m0(), m1 = a.m1();
  PhiMatrix psi = {{{checked_mul(q, checked_mul(m1, beta.beta1)),
                     -checked_mul(q, checked_mul(m0, beta.beta1))},
                    {-checked_mul(q, checked_mul(m1, beta.beta0)),
                     checked_mul(q, checked_mul(m0, beta.beta0))}}};
  return make_triple(a, b, p, 0, psi, y);
}

KTriple build_triple(const DimensionDropAlgebra& a,
                     const DimensionDropAlgebra& b, Int p, Int x, Int y,
                     Int d) {
  if (d < 0 || d >= k1_order(a))
    fail(Errc::BadTorsionIndex,
         "torsion parameter " + std::to_string(d) + " out of range");
  KTriple t = triple_add(build_x_triple(a, b, p, x), build_y_triple(a, b, p, y));
  PhiMatrix torsion = torsion_matrix(a);
  PhiMatrix phi;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      phi[i][j] = checked_add(t.phi[i][j], checked_mul(d, torsion[i][j]));
  return make_triple(a, b, p, t.x, phi, t.y);
}

KTriple triple_add(const KTriple& s, const KTriple& t) {
  if (!(s.source == t.source) || !(s.target == t.target) || s.p != t.p)
    fail(Errc::Mismatch, "triples live over different data");
  PhiMatrix phi;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      phi[i][j] = checked_add(s.phi[i][j], t.phi[i][j]);
  return make_triple(s.source, s.target, s.p, checked_add(s.x, t.x), phi,
                     checked_add(s.y, t.y));
}

KTriple triple_scale(const KTriple& t, Int k) {
  PhiMatrix phi;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) phi[i][j] = checked_mul(k, t.phi[i][j]);
  return make_triple(t.source, t.target, t.p, checked_mul(k, t.x), phi,
                     checked_mul(k, t.y));
}

TripleDecomposition decompose_triple(const KTriple& t) {
  ValidationResult valid = validate_triple(t);
  if (!valid.ok) fail(Errc::Mismatch, "triple is invalid: " + valid.failure);

  Int m = t.source.m(), n = t.target.m();
  Int g = gcd(m, n);
  Int sb = k1_order(t.target);
  Int step = n / g;

  Int k = -1;
  for (Int candidate = 0; candidate < sb; ++candidate) {
    if (floor_mod(checked_mul(candidate, step) - t.y, sb) == 0) {
      k = candidate;
      break;
    }
  }
  if (k < 0)
    fail(Errc::NoSolution, "no induced-Id multiplicity matches the triple");

  Int x0 = t.x - checked_mul(k, m / g);
  KTriple residual = triple_add(
      t, triple_scale(triple_add(
             triple_scale(induced_triple(make_basic_hom(HomKind::Id, t.source,
                                                        t.target),
                                         t.p),
                          k),
             build_x_triple(t.source, t.target, t.p, x0)),
         -1));
  Int d = torsion_param(residual);

  BezoutPair beta = bezout_canonical(t.source.m0(), t.source.m1());
  TripleDecomposition out;
  out.k = k;
  out.d = d;
  out.c0 = checked_sub(checked_mul(beta.beta0, x0),
                       checked_mul(d, t.source.m1()));
  out.c1 = checked_add(checked_mul(beta.beta1, x0),
                       checked_mul(d, t.source.m0()));

  KTriple rebuilt = triple_add(
      triple_scale(induced_triple(
                       make_basic_hom(HomKind::Id, t.source, t.target), t.p),
                   out.k),
      triple_add(
          triple_scale(induced_triple(make_basic_hom(HomKind::Delta0,
                                                     t.source, t.target),
                                      t.p),
                       out.c0),
          triple_scale(induced_triple(make_basic_hom(HomKind::Delta1,
                                                     t.source, t.target),
                                      t.p),
                       out.c1)));
  if (!triples_equal(t, rebuilt, EqualityMode::Map))
    throw InternalError("triple decomposition failed to recombine");
  return out;
}

}  // namespace kkdrop

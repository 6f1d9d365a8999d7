#include "kkdrop/coeff_ktheory.hpp"

#include <algorithm>
#include <set>

namespace kkdrop {

namespace {

void require_modulus(Int p) {
  if (p < 2) fail(Errc::BadModulus, "coefficient modulus must be at least 2");
}

void require_interior_multiple(const DimensionDropAlgebra& a, Int p) {
  if (p % a.m() != 0)
    fail(Errc::ModulusNotMultiple,
         "coefficient modulus must be a multiple of the interior size");
}

}  // namespace

bool coeff_pair_member(const DimensionDropAlgebra& a, Int p, Int b, Int c) {
  require_modulus(p);
  Int lhs = checked_sub(checked_mul(a.m() / a.m1(), c),
                        checked_mul(a.m() / a.m0(), b));
  return floor_mod(lhs, p) == 0;
}

GpElement make_gp_element(const DimensionDropAlgebra& a, Int p, Int a0, Int b,
                          Int c) {
  require_modulus(p);
  if (!coeff_pair_member(a, p, b, c))
    fail(Errc::NotInGroup, "coefficient pair fails the membership congruence");
  return GpElement{a, p, a0, canonical_residue(b, p), canonical_residue(c, p)};
}

std::vector<ResiduePair> coeff_pair_members(const DimensionDropAlgebra& a,
                                            Int p) {
  require_full_coprime(a, "coeff_pair_members");
  require_modulus(p);
  std::vector<ResiduePair> out;
  for (Int b = 0; b < p; ++b)
    for (Int c = 0; c < p; ++c)
      if (coeff_pair_member(a, p, b, c)) out.push_back({b, c});
  return out;  // loop order is already lexicographic
}

bool is_positive(const GpElement& e) {
  if (!coeff_pair_member(e.algebra, e.p, e.b, e.c))
    fail(Errc::NotInGroup, "coefficient pair fails the membership congruence");
  Int g = gcd(e.algebra.m0(), e.algebra.m1());
  return checked_mul(e.a, e.algebra.m0() / g) >= e.b &&
         checked_mul(e.a, e.algebra.m1() / g) >= e.c;
}

std::array<GpElement, 4> cone_generators(const DimensionDropAlgebra& a,
                                         Int p) {
  require_full_coprime(a, "cone_generators");
  require_modulus(p);
  require_interior_multiple(a, p);
  Int q = p / a.m();
  return {make_gp_element(a, p, 1, 0, 0),
          make_gp_element(a, p, 1, a.m0(), a.m1()),
          make_gp_element(a, p, q, 0, checked_mul(q, a.m1())),
          make_gp_element(a, p, q, checked_mul(q, a.m0()), 0)};
}

std::array<Int, 4> cone_decompose(const GpElement& e) {
  require_full_coprime(e.algebra, "cone_decompose");
  require_interior_multiple(e.algebra, e.p);
  if (!is_positive(e))
    fail(Errc::NotPositive, "element lies outside the positive cone");
  if (e.b % e.algebra.m0() != 0 || e.c % e.algebra.m1() != 0)
    fail(Errc::NotDecomposable,
         "canonical residues are not endpoint-size multiples");
  Int l1 = e.b / e.algebra.m0();
  Int l2 = e.c / e.algebra.m1();
  // Membership forces p/m | l1 - l2, so the id/idbar coefficient is integral.
  Int q = e.p / e.algebra.m();
  if ((l1 - l2) % q != 0)
    fail(Errc::NotDecomposable, "endpoint levels differ off the modulus grid");
  if (l1 >= l2) return {e.a - l1, l2, 0, (l1 - l2) / q};
  return {e.a - l2, l1, (l2 - l1) / q, 0};
}

ResiduePair bockstein_mu(const DimensionDropAlgebra& a, Int p, Int k) {
  require_modulus(p);
  return {canonical_residue(checked_mul(k, a.m0()), p),
          canonical_residue(checked_mul(k, a.m1()), p)};
}

Int bockstein_nu(const DimensionDropAlgebra& a, Int p, ResiduePair bc) {
  Int s = k1_order(a);
  require_modulus(p);
  require_interior_multiple(a, p);
  if (!coeff_pair_member(a, p, bc.b, bc.c))
    fail(Errc::NotInGroup, "coefficient pair fails the membership congruence");
  Int lhs = checked_sub(checked_mul(a.m() / a.m1(), bc.c),
                        checked_mul(a.m() / a.m0(), bc.b));
  return floor_mod(lhs / p, s);
}

ExactnessReport verify_bockstein_exactness(const DimensionDropAlgebra& a,
                                           Int p) {
  require_full_coprime(a, "verify_bockstein_exactness");
  require_modulus(p);
  require_interior_multiple(a, p);
  ExactnessReport report;
  Int s = k1_order(a);

  report.kernel_mu_ok = true;
  for (Int k = 0; k <= checked_mul(p, p); ++k) {
    bool zero = bockstein_mu(a, p, k) == ResiduePair{0, 0};
    if (zero != (k % p == 0)) {
      report.kernel_mu_ok = false;
      report.witness = "kernel of mu: k=" + std::to_string(k);
      return report;
    }
  }

  std::set<ResiduePair> mu_image;
  for (Int k = 0; k < p; ++k) mu_image.insert(bockstein_mu(a, p, k));
  report.image_mu_ok = true;
  for (const ResiduePair& bc : coeff_pair_members(a, p)) {
    bool in_image = mu_image.count(bc) > 0;
    bool in_kernel = bockstein_nu(a, p, bc) == 0;
    if (in_image != in_kernel) {
      report.image_mu_ok = false;
      report.witness = "image of mu: pair (" + std::to_string(bc.b) + "," +
                       std::to_string(bc.c) + ")";
      return report;
    }
  }

  std::set<Int> nu_image;
  for (const ResiduePair& bc : coeff_pair_members(a, p))
    nu_image.insert(bockstein_nu(a, p, bc));
  report.image_nu_ok = true;
  for (Int t = 0; t < s; ++t) {
    bool in_image = nu_image.count(t) > 0;
    bool killed_by_p = floor_mod(checked_mul(p, t), s) == 0;
    if (in_image != killed_by_p) {
      report.image_nu_ok = false;
      report.witness = "image of nu: class " + std::to_string(t);
      return report;
    }
  }
  return report;
}

std::pair<Int, Int> scalar_class(Int c0, Int c1, Int interior, Int p) {
  require_modulus(p);
  if (c0 < 0 || c1 < 0 || interior < 0)
    fail(Errc::NotPositive, "representation multiplicities must be >= 0");
  return {checked_add(checked_add(c0, c1), checked_mul(interior, p)),
          canonical_residue(c1, p)};
}

}  // namespace kkdrop

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "kkdrop/algebra.hpp"

namespace kkdrop {

struct ResiduePair {
  Int b = 0;
  Int c = 0;

  friend bool operator==(const ResiduePair&, const ResiduePair&) = default;
  friend auto operator<=>(const ResiduePair&, const ResiduePair&) = default;
};

// Element (a, b, c) of K0(A; G_p) ~ Z (+) C where C is the subgroup of
// (Z_p)^2 cut out by (m/m1)*c - (m/m0)*b == 0 (mod p).  a is a plain
// integer; b and c are stored as canonical residues in [0, p).
struct GpElement {
  DimensionDropAlgebra algebra;
  Int p;
  Int a;
  Int b;
  Int c;

  friend bool operator==(const GpElement&, const GpElement&) = default;
};

GpElement make_gp_element(const DimensionDropAlgebra& a, Int p, Int a0, Int b,
                          Int c);

// Membership test for the coefficient pair subgroup; accepts arbitrary
// integer representatives (the congruence is p-periodic in both slots).
bool coeff_pair_member(const DimensionDropAlgebra& a, Int p, Int b, Int c);

// All members with canonical residues, lexicographically sorted.
std::vector<ResiduePair> coeff_pair_members(const DimensionDropAlgebra& a,
                                            Int p);

// Cone test against the stored canonical residues:
// a*m0/gcd(m0,m1) >= b and a*m1/gcd(m0,m1) >= c.
bool is_positive(const GpElement& e);

// The four extreme classes generating the positive cone when the endpoint
// sizes are coprime and m | p, in the order delta0, delta1, id, idbar:
// (1,0,0), (1,m0,m1), (p/m)*(1,0,m1), (p/m)*(1,m0,0).
std::array<GpElement, 4> cone_generators(const DimensionDropAlgebra& a, Int p);

// Coefficients (c_delta0, c_delta1, c_id, c_idbar), all non-negative, whose
// weighted sum of cone generators recombines exactly to e.
std::array<Int, 4> cone_decompose(const GpElement& e);

// First Bockstein map: k -> (k*m0 mod p, k*m1 mod p).
ResiduePair bockstein_mu(const DimensionDropAlgebra& a, Int p, Int k);

// Second Bockstein map: exact integer ((m/m1)*c - (m/m0)*b) / p reduced
// mod k1_order(a).  Requires membership and m | p.
Int bockstein_nu(const DimensionDropAlgebra& a, Int p, ResiduePair bc);

struct ExactnessReport {
  bool kernel_mu_ok = false;   // kernel of mu equals p*Z
  bool image_mu_ok = false;    // image of mu equals kernel of nu
  bool image_nu_ok = false;    // image of nu equals kernel of *p on Z_s
  std::string witness;         // first failure found, empty when exact

  bool exact() const { return kernel_mu_ok && image_mu_ok && image_nu_ok; }
};

// Finite verification of the mu/nu exactness on canonical representatives.
ExactnessReport verify_bockstein_exactness(const DimensionDropAlgebra& a,
                                           Int p);

// Class of a projection with c0/c1 endpoint multiplicities and `interior`
// full interior summands in K0(C[0,1]; G_p) coordinates.
std::pair<Int, Int> scalar_class(Int c0, Int c1, Int interior, Int p);

}  // namespace kkdrop

#pragma once

#include <array>
#include <utility>

#include "kkdrop/triples.hpp"

namespace kkdrop {

// Formal integer combination of the four basic homomorphism classes,
// in the order (delta0, delta1, id, idbar).
struct KKElement {
  DimensionDropAlgebra source;
  DimensionDropAlgebra target;
  std::array<Int, 4> coeffs;

  friend bool operator==(const KKElement&, const KKElement&) = default;
};

KKElement make_kk_element(const DimensionDropAlgebra& source,
                          const DimensionDropAlgebra& target,
                          const std::array<Int, 4>& coeffs);

// Coefficient-weighted sum of the induced basic triples at modulus p.
KTriple induced_triple(const KKElement& e, Int p);

// Compares induced triples at the canonical modulus lcm(m, n).
bool kk_equal(const KKElement& a, const KKElement& b,
              EqualityMode mode = EqualityMode::Map);

struct KKCanonicalForm {
  Int x;      // free K0 multiplicity
  Int y_mod;  // K1 multiplicity mod n/(m0*m1)
  Int d;      // torsion parameter
  Int k;      // generator expression: k*id + c0*delta0 + c1*delta1
  Int c0;
  Int c1;

  friend bool operator==(const KKCanonicalForm&,
                         const KKCanonicalForm&) = default;
};

KKCanonicalForm kk_canonical(const KKElement& e);

struct KKGroupInfo {
  Int free_rank;                          // always 1
  std::pair<Int, Int> formula_torsion;    // cyclic orders (gcd(n,m), m/(m0*m1))
  Int enumerated_torsion_count;           // brute-force census, x = 0, y == 0
  bool counts_agree;                      // product of orders vs census
};

// Reports the closed-form torsion orders alongside a brute-force census of
// distinct valid triples (0, phi, 0) at p = lcm(m, n) under the given
// equality mode.  The two counts measure different slices and are reported
// side by side without reconciliation.
KKGroupInfo kk_group_info(const DimensionDropAlgebra& a,
                          const DimensionDropAlgebra& b,
                          EqualityMode mode = EqualityMode::Map);

// Census helper: number of distinct valid triples (0, phi, 0) at modulus p.
Int count_torsion_triples(const DimensionDropAlgebra& a,
                          const DimensionDropAlgebra& b, Int p,
                          EqualityMode mode);

}  // namespace kkdrop

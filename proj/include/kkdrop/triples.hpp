#pragma once

#include <array>
#include <string>

#include "kkdrop/coeff_ktheory.hpp"

namespace kkdrop {

using PhiMatrix = std::array<std::array<Int, 2>, 2>;

enum class EqualityMode { Map, Strict };

const char* equality_mode_name(EqualityMode mode);

// Morphism data (x, phi, y) between the K-theory invariants of two drop
// algebras I[m0,m,m1] -> I[m0,n,m1] at a common modulus p with m | p and
// n | p: x acts on the free K0 part, phi (canonical residues mod p) on the
// coefficient pairs, y on the cyclic K1 groups.
struct KTriple {
  DimensionDropAlgebra source;
  DimensionDropAlgebra target;
  Int p;
  Int x;
  PhiMatrix phi;
  Int y;
};

// Checks endpoint equality, validity of both algebras, p >= 2, m | p and
// n | p; canonicalizes the matrix entries.
KTriple make_triple(const DimensionDropAlgebra& source,
                    const DimensionDropAlgebra& target, Int p, Int x,
                    const PhiMatrix& phi, Int y);

KTriple zero_triple(const DimensionDropAlgebra& source,
                    const DimensionDropAlgebra& target, Int p);

// The two designated generators of the source coefficient pair group:
// g1 = (m0, m1) and g2 = (0, (p/m)*m1), as canonical residues.
ResiduePair generator_g1(const DimensionDropAlgebra& a, Int p);
ResiduePair generator_g2(const DimensionDropAlgebra& a, Int p);

ResiduePair apply_phi(const KTriple& t, ResiduePair v);

// Image (x*a, phi*(b,c)) of a source-side element; result lives over the
// target algebra at the same modulus.
GpElement apply_triple(const KTriple& t, const GpElement& e);

struct ValidationResult {
  bool ok = true;
  std::string failure;  // names the square/generator that broke
};

// A triple is a morphism of the mod-p K-theory exact sequences iff
//  (1) phi*(m0,m1) == x*(m0,m1) mod p,
//  (2) n/(m0*m1) divides y*m/(m0*m1), and
//  (3) nu_B(phi*g) == y*nu_A(g) mod n/(m0*m1) for g in {g1, g2},
// with both phi-images landing in the target pair group.
ValidationResult validate_triple(const KTriple& t);

// Map: equal images of g1 and g2 plus y mod n/(m0*m1) (and equal x).
// Strict: entrywise matrix equality and integer equality of y.
bool triples_equal(const KTriple& s, const KTriple& t,
                   EqualityMode mode = EqualityMode::Map);

// The triple induced on K-theory by one of the four basic homomorphisms.
KTriple induced_triple(const BasicHom& h, Int p);

// Matrix of the generating torsion endomorphism:
// [[-m1*m0, m0*m0], [-m1*m1, m0*m1]].
PhiMatrix torsion_matrix(const DimensionDropAlgebra& a);

// For a triple with x == 0 and y == 0 mod n/(m0*m1), the unique
// d in [0, m/(m0*m1)) with t map-equal to d times the torsion matrix.
Int torsion_param(const KTriple& t);

// (x, x*[[m0*b0, m0*b1], [m1*b0, m1*b1]], 0) with (b0, b1) the canonical
// Bezout pair of (m0, m1).
KTriple build_x_triple(const DimensionDropAlgebra& a,
                       const DimensionDropAlgebra& b, Int p, Int x);

// (0, psi, y) where psi = (m*y/n) * [[m1*b1, -m0*b1], [-m1*b0, m0*b0]];
// requires n/(m0*m1) to divide y*m/(m0*m1).
KTriple build_y_triple(const DimensionDropAlgebra& a,
                       const DimensionDropAlgebra& b, Int p, Int y);

// Sum of the x-triple, the y-triple and d times the torsion matrix;
// requires 0 <= d < m/(m0*m1).
KTriple build_triple(const DimensionDropAlgebra& a,
                     const DimensionDropAlgebra& b, Int p, Int x, Int y,
                     Int d);

KTriple triple_add(const KTriple& s, const KTriple& t);
KTriple triple_scale(const KTriple& t, Int k);

struct TripleDecomposition {
  Int k;   // multiplier of the induced Id triple
  Int c0;  // multiplier of the induced Delta0 triple
  Int c1;  // multiplier of the induced Delta1 triple
  Int d;   // torsion parameter folded into c0/c1

  friend bool operator==(const TripleDecomposition&,
                         const TripleDecomposition&) = default;
};

// Expresses a valid triple as k*Id + c0*Delta0 + c1*Delta1 (map equality),
// with k the least residue solving k*(n/gcd(m,n)) == y mod n/(m0*m1).
TripleDecomposition decompose_triple(const KTriple& t);

}  // namespace kkdrop

#pragma once

#include "kkdrop/arithmetic.hpp"

namespace kkdrop {

// Generalized dimension drop interval I[m0, m, m1]: M_m-valued functions on
// [0,1] whose endpoint values lie in embedded copies of M_{m0} and M_{m1}.
// Construction requires m0 | m and m1 | m; the coprimality and full-drop
// properties are exposed as flags because most of the K-theoretic machinery
// is only available when both hold.
class DimensionDropAlgebra {
 public:
  DimensionDropAlgebra(Int m0, Int m, Int m1);

  Int m0() const { return m0_; }
  Int m() const { return m_; }
  Int m1() const { return m1_; }

  bool coprime_endpoints() const { return gcd(m0_, m1_) == 1; }
  bool full_drop() const { return m_ % (m0_ * m1_) == 0; }

  friend bool operator==(const DimensionDropAlgebra&,
                         const DimensionDropAlgebra&) = default;

 private:
  Int m0_;
  Int m_;
  Int m1_;
};

// Requires coprime endpoints and full drop; throws Errc::InvalidAlgebra.
void require_full_coprime(const DimensionDropAlgebra& a, const char* where);

// Order of K1(I[m0,m,m1]) as a cyclic group: m / (m0*m1).
Int k1_order(const DimensionDropAlgebra& a);

// The four basic homomorphism patterns between drop algebras sharing
// endpoint sizes: evaluation at either endpoint (Delta0, Delta1), the
// scaled identity inclusion (Id) and its orientation-reversed twin (IdBar).
enum class HomKind { Delta0, Delta1, Id, IdBar };

const char* hom_kind_name(HomKind k);

struct BasicHom {
  HomKind kind;
  DimensionDropAlgebra source;
  DimensionDropAlgebra target;
};

// Checks endpoint compatibility; Delta0/Delta1/IdBar additionally require
// coprime endpoints.
BasicHom make_basic_hom(HomKind kind, const DimensionDropAlgebra& source,
                        const DimensionDropAlgebra& target);

// Element u*[V0] + v*[V1] of the K-homology group generated by the two
// endpoint evaluations, subject to (m/m0)*[V0] == (m/m1)*[V1].
struct KHomologyClass {
  DimensionDropAlgebra algebra;
  Int u = 0;
  Int v = 0;
};

bool khomology_equal(const KHomologyClass& a, const KHomologyClass& b);

// True when some representative (u + t*m/m0, v - t*m/m1) has both entries
// non-negative, i.e. the integer interval [ceil(-u*m0/m), floor(v*m1/m)]
// is non-empty.
bool khomology_positive(const KHomologyClass& c);

}  // namespace kkdrop

#include "kkdrop/algebra.hpp"

#include <string>

namespace kkdrop {

DimensionDropAlgebra::DimensionDropAlgebra(Int m0, Int m, Int m1)
    : m0_(m0), m_(m), m1_(m1) {
  if (m0 < 1 || m < 1 || m1 < 1)
    fail(Errc::InvalidAlgebra, "sizes must be positive");
  if (m % m0 != 0 || m % m1 != 0)
    fail(Errc::InvalidAlgebra, "endpoint sizes must divide the interior size");
}

void require_full_coprime(const DimensionDropAlgebra& a, const char* where) {
  if (!a.coprime_endpoints() || !a.full_drop())
    fail(Errc::InvalidAlgebra,
         std::string(where) + " requires coprime endpoint sizes");
}

Int k1_order(const DimensionDropAlgebra& a) {
  require_full_coprime(a, "k1_order");
  return a.m() / (a.m0() * a.m1());
}

const char* hom_kind_name(HomKind kind) {
  switch (kind) {
    case HomKind::Delta0: return "delta0";
    case HomKind::Delta1: return "delta1";
    case HomKind::Id: return "id";
    case HomKind::IdBar: return "idbar";
  }
  return "unknown";
}

BasicHom make_basic_hom(HomKind kind, const DimensionDropAlgebra& source,
                        const DimensionDropAlgebra& target) {
  if (source.m0() != target.m0() || source.m1() != target.m1())
    fail(Errc::AlgebraMismatch,
         "basic homomorphisms require matching endpoint sizes");
  if (kind != HomKind::Id) require_full_coprime(source, hom_kind_name(kind));
  return BasicHom{kind, source, target};
}

bool khomology_equal(const KHomologyClass& a, const KHomologyClass& b) {
  if (!(a.algebra == b.algebra))
    fail(Errc::AlgebraMismatch, "classes live over different algebras");
  Int r0 = a.algebra.m() / a.algebra.m0();
  Int r1 = a.algebra.m() / a.algebra.m1();
  Int du = a.u - b.u;
  if (du % r0 != 0) return false;
  return a.v - b.v == -(du / r0) * r1;
}

bool khomology_positive(const KHomologyClass& cls) {
  Int r0 = cls.algebra.m() / cls.algebra.m0();
  Int r1 = cls.algebra.m() / cls.algebra.m1();
  Int lo = -floor_div(cls.u, r0);  // ceil(-u / r0)
  Int hi = floor_div(cls.v, r1);
  return lo <= hi;
}

}  // namespace kkdrop

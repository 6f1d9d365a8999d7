#include <doctest.h>

#include "kkdrop/kk.hpp"
#include "kkdrop/errors.hpp"
#include "test_util.hpp"

using namespace kkdrop;
using test::error_code;

namespace {

const DimensionDropAlgebra kA(2, 12, 3);
const DimensionDropAlgebra kB(2, 24, 3);

KKElement elem(std::array<Int, 4> coeffs) {
  return make_kk_element(kA, kA, coeffs);
}

}  // namespace

TEST_CASE("KK element construction") {
  CHECK(elem({4, -2, 0, 0}).coeffs == std::array<Int, 4>{4, -2, 0, 0});

  CHECK(error_code([] {
          make_kk_element(kA, DimensionDropAlgebra(3, 12, 2), {});
        }) == Errc::AlgebraMismatch);
  CHECK(error_code([] {
          make_kk_element(DimensionDropAlgebra(2, 4, 2),
                          DimensionDropAlgebra(2, 4, 2), {});
        }) == Errc::InvalidAlgebra);
}

TEST_CASE("induced triples of KK elements") {
  CHECK(induced_triple(elem({4, -2, 0, 0}), 12).x == 2);
  CHECK(induced_triple(elem({4, -2, 0, 0}), 12).phi ==
        PhiMatrix{{{8, 8}, {0, 6}}});
  CHECK(induced_triple(elem({4, -2, 0, 0}), 12).y == 0);

  CHECK(triples_equal(induced_triple(elem({0, 0, 0, 0}), 12),
                      zero_triple(kA, kA, 12), EqualityMode::Strict));
  CHECK(triples_equal(
      induced_triple(elem({0, 0, 1, 0}), 12),
      induced_triple(make_basic_hom(HomKind::Id, kA, kA), 12),
      EqualityMode::Strict));
}

TEST_CASE("induced triples are additive") {
  const std::array<std::array<Int, 4>, 6> shifts = {{{1, 0, 0, 0},
                                                     {0, -2, 0, 0},
                                                     {0, 0, 1, 0},
                                                     {0, 0, 0, 1},
                                                     {2, -1, 1, 0},
                                                     {-1, 2, 0, -1}}};
  for (Int c0 = -2; c0 <= 2; ++c0)
    for (Int c1 = -2; c1 <= 2; ++c1)
      for (Int c2 = -1; c2 <= 1; ++c2)
        for (Int c3 = -1; c3 <= 1; ++c3) {
          const KKElement e = elem({c0, c1, c2, c3});
          for (const std::array<Int, 4>& s : shifts) {
            const KKElement f = elem(s);
            const KKElement sum = elem({c0 + s[0], c1 + s[1], c2 + s[2],
                                        c3 + s[3]});
            CHECK(triples_equal(
                induced_triple(sum, 12),
                triple_add(induced_triple(e, 12), induced_triple(f, 12)),
                EqualityMode::Strict));
          }
        }
}

TEST_CASE("KK equality") {
  CHECK(kk_equal(elem({6, 0, 0, 0}), elem({0, 4, 0, 0})));
  CHECK_FALSE(kk_equal(elem({6, 0, 0, 0}), elem({0, 4, 0, 0}),
                       EqualityMode::Strict));
  CHECK_FALSE(kk_equal(elem({1, 0, 0, 0}), elem({0, 1, 0, 0})));
  CHECK(kk_equal(elem({1, 0, 0, 0}), elem({1, 0, 0, 0}),
                 EqualityMode::Strict));

  // The torsion element m1*delta0 - m0*delta1 has order exactly s = 2.
  CHECK_FALSE(kk_equal(elem({3, -2, 0, 0}), elem({0, 0, 0, 0})));
  CHECK(kk_equal(elem({6, -4, 0, 0}), elem({0, 0, 0, 0})));

  CHECK(error_code([] {
          kk_equal(make_kk_element(kA, kA, {}), make_kk_element(kA, kB, {}));
        }) == Errc::Mismatch);
}

TEST_CASE("KK canonical form") {
  CHECK(kk_canonical(elem({4, -2, 0, 0})) ==
        KKCanonicalForm{2, 0, 0, 0, 4, -2});
  CHECK(kk_canonical(elem({1, 0, 0, 0})) == KKCanonicalForm{2, 0, 1, 0, 1, 0});
  CHECK(kk_canonical(elem({0, 0, 0, 0})) == KKCanonicalForm{0, 0, 0, 0, 0, 0});
  CHECK(kk_canonical(elem({0, 0, 1, 0})) == KKCanonicalForm{1, 1, 0, 1, 0, 0});
  CHECK(kk_canonical(make_kk_element(kA, kB, {1, 0, 0, 0})) ==
        KKCanonicalForm{2, 0, 1, 0, 1, 0});
}

TEST_CASE("canonical forms reconstruct the element") {
  for (Int c0 = -3; c0 <= 3; ++c0)
    for (Int c1 = -3; c1 <= 3; ++c1)
      for (Int c3 = -1; c3 <= 1; ++c3) {
        const KKElement e = elem({c0, c1, 2, c3});
        const KKCanonicalForm form = kk_canonical(e);
        const KKElement rebuilt = elem({form.c0, form.c1, form.k, 0});
        CHECK(kk_equal(rebuilt, e));
      }
}

TEST_CASE("KK group info") {
  const KKGroupInfo info = kk_group_info(kA, kA);
  CHECK(info.free_rank == 1);
  CHECK(info.formula_torsion == std::pair<Int, Int>{12, 2});
  CHECK(info.enumerated_torsion_count == 2);
  CHECK_FALSE(info.counts_agree);

  const DimensionDropAlgebra small(1, 2, 1);
  const KKGroupInfo tiny = kk_group_info(small, small);
  CHECK(tiny.formula_torsion == std::pair<Int, Int>{2, 2});
  CHECK(tiny.enumerated_torsion_count == 2);
  CHECK_FALSE(tiny.counts_agree);

  CHECK(count_torsion_triples(small, small, 2, EqualityMode::Strict) == 2);
  CHECK(error_code([&] {
          count_torsion_triples(kA, kA, 13, EqualityMode::Map);
        }) == Errc::ModulusNotMultiple);
}

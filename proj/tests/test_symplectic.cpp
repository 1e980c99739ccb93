#include <doctest.h>

#include "chevbg/errors.hpp"
#include "chevbg/random.hpp"
#include "chevbg/symplectic.hpp"
#include "test_support.hpp"

using namespace chevbg;
using testing::P;
using testing::zx;

TEST_CASE("sp_elem_matrix shapes") {
  const Ring ring = zx();
  const RingElem a = P("x1^2-3");

  SqMatrix long_upper = SqMatrix::identity(4, ring);
  long_upper.set(0, 2, a);
  CHECK(sp_elem_matrix(SpGen(SpKind::LongUpper, 1, 0, a), 2) == long_upper);
  CHECK(preserves_form(long_upper));

  SqMatrix linear = SqMatrix::identity(4, ring);
  linear.set(0, 1, a);
  linear.set(3, 2, -a);
  CHECK(sp_elem_matrix(SpGen(SpKind::Linear, 1, 2, a), 2) == linear);
  CHECK(preserves_form(linear));

  SqMatrix mixed = SqMatrix::identity(6, ring);
  mixed.set(0, 5, a);  // E_{1,3+3}
  mixed.set(2, 3, a);  // E_{3,1+3}
  CHECK(sp_elem_matrix(SpGen(SpKind::MixedUpper, 1, 3, a), 3) == mixed);
  CHECK(sp_elem_matrix(SpGen(SpKind::MixedLower, 1, 3, a), 3) == mixed.transposed());

  for (auto kind : {SpKind::Linear, SpKind::LongUpper, SpKind::LongLower, SpKind::MixedUpper,
                    SpKind::MixedLower}) {
    const std::size_t j = is_long(kind) ? 0 : 2;
    CHECK(sp_elem_matrix(SpGen(kind, 1, j, P("0")), 3).is_identity());
  }
}

TEST_CASE("a matrix outside Sp fails the form check") {
  SqMatrix m = SqMatrix::identity(4, zx());
  m.set(0, 1, P("1"));  // upper-left block changed without the compensating block
  CHECK_FALSE(preserves_form(m));
  CHECK(mat_det(m).is_one());
}

TEST_CASE("index checks") {
  CHECK_THROWS_AS(sp_elem_matrix(SpGen(SpKind::Linear, 1, 1, P("1")), 2), IndexError);
  CHECK_THROWS_AS(sp_elem_matrix(SpGen(SpKind::LongUpper, 3, 0, P("1")), 2), IndexError);
  CHECK_THROWS_AS(sp_elem_matrix(SpGen(SpKind::MixedUpper, 1, 3, P("1")), 2), IndexError);
  CHECK_THROWS_AS(SpWord(1, zx()), Unsupported);
}

TEST_CASE("form, determinant and additivity on every generator") {
  Rng rng(31);
  for (std::size_t n : {2u, 3u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const SpGen g = random_sp_gen(rng, n, zx(2), PolyShape{3, 3, 7});
      const SqMatrix m = sp_elem_matrix(g, n);
      CHECK(preserves_form(m));
      CHECK(mat_det(m).is_one());
      const RingElem b = random_poly(rng, zx(2), PolyShape{3, 3, 7});
      CHECK(m * sp_elem_matrix(g.with_param(b), n) == sp_elem_matrix(g.with_param(g.param + b), n));
      CHECK((m * sp_elem_matrix(g.inverse(), n)).is_identity());
    }
  }
}

TEST_CASE("sp_relations_fuzz") {
  CHECK_THROWS_AS(sp_relations_fuzz(2, zx(), 1, 0), Error);
  const auto report = sp_relations_fuzz(3, zx(), 7, 40);
  CHECK(report.trials == 40);
  CHECK(report.passed == 40);
  CHECK(report.failed == 0);
  CHECK(report.max_word_length <= 10);

  const auto modular = sp_relations_fuzz(2, testing::zmod(4, 1), 8, 30);
  CHECK(modular.failed == 0);

  const auto a = sp_relations_fuzz(2, zx(), 99, 10);
  const auto b = sp_relations_fuzz(2, zx(), 99, 10);
  CHECK(a.max_word_length == b.max_word_length);
}

#include <doctest.h>

#include "chevbg/errors.hpp"
#include "chevbg/random.hpp"
#include "test_support.hpp"

using namespace chevbg;
using testing::P;
using testing::zx;

namespace {

SqMatrix random_matrix(Rng& rng, std::size_t n, const Ring& ring, const PolyShape& shape) {
  SqMatrix m(n, ring);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, random_poly(rng, ring, shape));
  return m;
}

}  // namespace

TEST_CASE("mat_mul examples") {
  const Ring ring = zx();
  const SqMatrix id = SqMatrix::identity(3, ring);
  CHECK(id * id == id);
  CHECK((elem_matrix(ElemGen(1, 2, P("x1")), 3) * elem_matrix(ElemGen(1, 2, P("-x1")), 3))
            .is_identity());

  // hand multiplication of e12(x1) e23(1)
  SqMatrix expected = SqMatrix::identity(3, ring);
  expected.set(0, 1, P("x1"));
  expected.set(1, 2, P("1"));
  expected.set(0, 2, P("x1"));
  CHECK(mat_mul(elem_matrix(ElemGen(1, 2, P("x1")), 3), elem_matrix(ElemGen(2, 3, P("1")), 3)) ==
        expected);
}

TEST_CASE("shape and ring mismatches") {
  CHECK_THROWS_AS(SqMatrix::identity(3, zx()) * SqMatrix::identity(4, zx()), IncompatibleRing);
  CHECK_THROWS_AS(SqMatrix::identity(3, zx()) * SqMatrix::identity(3, zx(2)), IncompatibleRing);
  CHECK_THROWS_AS(SqMatrix(13, zx()), Unsupported);
  CHECK_THROWS_AS(SqMatrix(1, zx()), Unsupported);
}

TEST_CASE("mat_det examples") {
  CHECK(mat_det(SqMatrix::identity(3, zx())).is_one());
  CHECK(mat_det(elem_matrix(ElemGen(1, 2, P("x1^5-2")), 3)).is_one());
  CHECK(mat_det(elem_matrix(ElemGen(2, 1, P("x1")), 3) * elem_matrix(ElemGen(1, 3, P("x1^2")), 3))
            .is_one());

  SqMatrix m(2, zx());
  m.set(0, 0, P("x1"));
  m.set(0, 1, P("2"));
  m.set(1, 0, P("3"));
  m.set(1, 1, P("x1+1"));
  CHECK(mat_det(m) == P("x1^2+x1-6"));
}

TEST_CASE("determinant agrees with the permutation formula at integer points") {
  Rng rng(5);
  const Ring ring = zx(2);
  const PolyShape shape{3, 2, 4};
  for (std::size_t n : {2u, 3u, 4u, 5u, 6u}) {
    for (int trial = 0; trial < 6; ++trial) {
      SqMatrix m = random_matrix(rng, n, ring, shape);
      if (trial == 0) {
        for (std::size_t c = 0; c < n; ++c) m.set(0, c, RingElem::zero(ring));  // forces a pivot swap
        m.set(0, n - 1, P("x1", ring));
      }
      const RingElem det = mat_det(m);
      CHECK(bareiss_det(m) == cofactor_det(m));
      for (int pt = 0; pt < 3; ++pt) {
        const std::vector<long> point{rng.uniform(-5, 5), rng.uniform(-5, 5)};
        CHECK(testing::eval_at(det, point) ==
              testing::permutation_det(testing::eval_matrix(m, point)));
      }
    }
  }
}

TEST_CASE("Bareiss over Z/m lifts and reduces") {
  Rng rng(6);
  const Ring ring = testing::zmod(6, 1);
  for (int trial = 0; trial < 10; ++trial) {
    const SqMatrix m = random_matrix(rng, 5, ring, PolyShape{2, 2, 5});
    CHECK(bareiss_det(m) == cofactor_det(m));
  }
  SqMatrix singular = SqMatrix::identity(5, ring);
  singular.set(2, 2, RingElem::zero(ring));
  CHECK(mat_det(singular).is_zero());
}

TEST_CASE("det is multiplicative and mat_mul associative") {
  Rng rng(7);
  const Ring ring = zx(1);
  const PolyShape shape{3, 2, 5};
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 15; ++trial) {
      const SqMatrix a = random_matrix(rng, n, ring, shape);
      const SqMatrix b = random_matrix(rng, n, ring, shape);
      const SqMatrix c = random_matrix(rng, n, ring, shape);
      CHECK(mat_det(a * b) == mat_det(a) * mat_det(b));
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

#include <doctest.h>

#include <set>

#include "chevbg/errors.hpp"
#include "chevbg/random.hpp"
#include "test_support.hpp"

using namespace chevbg;
using testing::P;
using testing::W;
using testing::zx;

TEST_CASE("elem_matrix") {
  CHECK(elem_matrix(ElemGen(1, 2, P("0")), 3).is_identity());
  SqMatrix e13 = SqMatrix::identity(3, zx());
  e13.set(0, 2, P("x1"));
  CHECK(elem_matrix(ElemGen(1, 3, P("x1")), 3) == e13);
  SqMatrix e31 = SqMatrix::identity(3, zx());
  e31.set(2, 0, P("-2"));
  CHECK(elem_matrix(ElemGen(3, 1, P("-2")), 3) == e31);
  CHECK_THROWS_AS(elem_matrix(ElemGen(1, 4, P("1")), 3), IndexError);
  CHECK_THROWS_AS(elem_matrix(ElemGen(2, 2, P("1")), 3), IndexError);
}

TEST_CASE("word_eval") {
  CHECK(word_eval(Word(3, zx())).is_identity());
  CHECK(word_eval(W("E(1,2;x1+2) E(1,2;3*x1)")) == elem_matrix(ElemGen(1, 2, P("4*x1+2")), 3));
  CHECK(word_eval(W("E(1,2;x1) E(2,3;1)")) ==
        elem_matrix(ElemGen(1, 2, P("x1")), 3) * elem_matrix(ElemGen(2, 3, P("1")), 3));
}

TEST_CASE("word_eval equals the plain matrix product") {
  Rng rng(21);
  const PolyShape shape{3, 2, 4};
  for (int trial = 0; trial < 40; ++trial) {
    const Word w = random_word(rng, 4, zx(2), 10, shape);
    SqMatrix prod = SqMatrix::identity(4, zx(2));
    for (const auto& g : w.gens()) prod = prod * elem_matrix(g, 4);
    CHECK(word_eval(w) == prod);
  }
}

TEST_CASE("word_inverse") {
  CHECK(word_inverse(Word(3, zx())).empty());
  CHECK(word_inverse(W("E(1,2;x1)")) == W("E(1,2;-x1)"));
  const Word w = W("E(1,2;1) E(2,3;x1)");
  const Word inv = word_inverse(w);
  CHECK(inv == W("E(2,3;-x1) E(1,2;-1)"));
  CHECK((word_eval(inv) * word_eval(w)).is_identity());

  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const Word r = random_word(rng, 4, zx(), 12, PolyShape{3, 3, 5});
    CHECK((word_eval(word_inverse(r)) * word_eval(r)).is_identity());
  }
}

TEST_CASE("normalization is explicit") {
  const Word w = W("E(1,2;x1) E(1,2;-x1) E(2,3;0) E(1,3;1) E(1,3;2)");
  CHECK(w.size() == 5);
  const Word nw = normalized(w);
  CHECK(nw == W("E(1,3;3)"));
  CHECK(word_eval(nw) == word_eval(w));
}

TEST_CASE("chevalley_commutator closed forms") {
  const auto r1 = chevalley_commutator(3, ElemGen(1, 3, P("x1")), ElemGen(3, 2, P("x1")));
  REQUIRE(std::holds_alternative<Word>(r1));
  CHECK(std::get<Word>(r1) == W("E(1,2;x1^2)"));

  const auto r2 = chevalley_commutator(4, ElemGen(1, 2, P("x1")), ElemGen(3, 4, P("5")));
  REQUIRE(std::holds_alternative<Word>(r2));
  CHECK(std::get<Word>(r2).empty());

  // [e12(x1), e23(1+x1)] by 3x3 symbolic multiplication of the 4-letter word
  const ElemGen g1(1, 2, P("x1"));
  const ElemGen g2(2, 3, P("1+x1"));
  CHECK(word_eval(commutator_word(3, g1, g2)) == elem_matrix(ElemGen(1, 3, P("x1+x1^2")), 3));
  const auto r3 = chevalley_commutator(3, g1, g2);
  REQUIRE(std::holds_alternative<Word>(r3));
  CHECK(std::get<Word>(r3) == W("E(1,3;x1^2+x1)"));

  const auto r4 = chevalley_commutator(3, ElemGen(1, 2, P("x1")), ElemGen(2, 1, P("1")));
  CHECK(std::holds_alternative<NoCommutatorFormula>(r4));

  CHECK_THROWS_AS(chevalley_commutator(2, ElemGen(1, 2, P("1")), ElemGen(2, 1, P("1"))), Unsupported);
  CHECK_THROWS_AS(chevalley_commutator(3, ElemGen(1, 4, P("1")), ElemGen(2, 1, P("1"))), IndexError);
}

TEST_CASE("every closed form matches the matrix commutator") {
  Rng rng(23);
  const std::size_t n = 4;
  const PolyShape shape{3, 2, 6};
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t l = 1; l <= n; ++l) {
          if (i == j || k == l) continue;
          const ElemGen g1(i, j, random_poly(rng, zx(), shape));
          const ElemGen g2(k, l, random_poly(rng, zx(), shape));
          const auto closed = chevalley_commutator(n, g1, g2);
          if (const auto* w = std::get_if<Word>(&closed)) {
            CHECK(word_eval(*w) == word_eval(commutator_word(n, g1, g2)));
          } else {
            CHECK((j == k && i == l));
          }
        }
}

TEST_CASE("generator invariants") {
  Rng rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const ElemGen g = random_elem_gen(rng, 5, zx(2), PolyShape{4, 3, 9});
    CHECK(mat_det(elem_matrix(g, 5)).is_one());
    CHECK((elem_matrix(g, 5) * elem_matrix(g.inverse(), 5)).is_identity());
  }
}

TEST_CASE("standard generating set") {
  const auto s = standard_genset(3, zx(2));
  CHECK(s.size() == 6 * 6);
  for (const auto& g : s) CHECK(in_standard_genset(g));
  CHECK_FALSE(in_standard_genset(ElemGen(1, 2, P("2"))));
  CHECK_FALSE(in_standard_genset(ElemGen(1, 2, P("x1^2"))));
  CHECK_FALSE(in_standard_genset(ElemGen(1, 2, P("0"))));
  CHECK(in_standard_genset(ElemGen(1, 2, P("-1", testing::zmod(5)))));
}

TEST_CASE("rewrite_over_finite_genset examples") {
  CHECK(rewrite_over_finite_genset(ElemGen(1, 2, P("1")), 3) == W("E(1,2;1)"));
  CHECK(rewrite_over_finite_genset(ElemGen(1, 2, P("2*x1")), 3) == W("E(1,2;x1) E(1,2;x1)"));
  const Word sq = rewrite_over_finite_genset(ElemGen(1, 2, P("x1^2")), 3);
  CHECK(sq == W("E(1,3;x1) E(3,2;x1) E(1,3;-x1) E(3,2;-x1)"));
  CHECK(word_eval(sq) == elem_matrix(ElemGen(1, 2, P("x1^2")), 3));
  CHECK(rewrite_over_finite_genset(ElemGen(1, 2, P("0")), 3).empty());
  CHECK_THROWS_AS(rewrite_over_finite_genset(ElemGen(1, 2, P("x1")), 2), Unsupported);
}

namespace {
void check_rewrite(const ElemGen& g, std::size_t n) {
  const Word w = rewrite_over_finite_genset(g, n);
  for (const auto& letter : w.gens()) CHECK(in_standard_genset(letter));
  CHECK(word_eval(w) == elem_matrix(g, n));
}
}  // namespace

TEST_CASE("rewriting large coefficients uses doubling") {
  check_rewrite(ElemGen(1, 2, P("17")), 3);
  check_rewrite(ElemGen(2, 1, P("-1000")), 3);
  check_rewrite(ElemGen(1, 3, P("40*x1")), 3);
  check_rewrite(ElemGen(3, 1, P("-33*x1^2*x2", zx(2))), 4);
  const Word big = rewrite_over_finite_genset(ElemGen(1, 2, P("1048576")), 3);
  CHECK(big.size() < 2000);
  CHECK(word_eval(big) == elem_matrix(ElemGen(1, 2, P("1048576")), 3));
}

TEST_CASE("rewriting over Z/m") {
  const Ring r = testing::zmod(7, 2);
  check_rewrite(ElemGen(1, 2, P("6*x1*x2+3", r)), 3);
  check_rewrite(ElemGen(2, 3, P("5*x2^3", r)), 3);
}

TEST_CASE("rewriting random parameters") {
  Rng rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(3, 5));
    const ElemGen g = random_elem_gen(rng, n, zx(2), PolyShape{4, 3, 16});
    check_rewrite(g, n);
  }
}

TEST_CASE("minimal_subring_generators") {
  CHECK(minimal_subring_generators(Word(3, zx())).empty());
  const auto gens = minimal_subring_generators(W("E(1,2;x1^2+1) E(2,3;-5)"));
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == P("x1^2+1"));
  CHECK(gens[1] == P("-5"));
  const auto dedup = minimal_subring_generators(W("E(1,2;x1+3) E(2,1;x1+3)"));
  CHECK(dedup.size() == 1);

  Rng rng(26);
  for (int trial = 0; trial < 30; ++trial) {
    const Word w = random_word(rng, 3, zx(), 10, PolyShape{2, 1, 2});
    std::set<std::string> syntactic;
    for (const auto& g : w.gens()) syntactic.insert(g.param.to_string());
    std::set<std::string> got;
    for (const auto& p : minimal_subring_generators(w)) got.insert(p.to_string());
    CHECK(got == syntactic);
    CHECK(minimal_subring_generators(w).size() == syntactic.size());
  }
}

#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "chevbg/matrix.hpp"
#include "chevbg/poly.hpp"

namespace chevbg {

/// e_{row,col}(param) = I + param * E_{row,col}. Indices are 1-based, row != col.
struct ElemGen {
  std::size_t row = 0;
  std::size_t col = 0;
  RingElem param;

  ElemGen(std::size_t i, std::size_t j, RingElem a) : row(i), col(j), param(std::move(a)) {}

  ElemGen inverse() const { return ElemGen(row, col, -param); }
  friend bool operator==(const ElemGen&, const ElemGen&) = default;
};

/// A finite sequence of type-A generators in dimension n over one ring; it
/// represents the left-to-right product of their matrices.
class Word {
 public:
  Word(std::size_t n, Ring ring);
  Word(std::size_t n, Ring ring, std::vector<ElemGen> gens);

  std::size_t dim() const noexcept { return n_; }
  const Ring& ring() const noexcept { return ring_; }
  const std::vector<ElemGen>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }

  void push_back(ElemGen g);
  void append(const Word& other);

  friend bool operator==(const Word&, const Word&) = default;

 private:
  void check(const ElemGen& g) const;

  std::size_t n_;
  Ring ring_;
  std::vector<ElemGen> gens_;
};

SqMatrix elem_matrix(const ElemGen& g, std::size_t n);

/// Product of the generators' matrices; the empty word evaluates to I.
SqMatrix word_eval(const Word& w);

/// Reversed word with negated parameters.
Word word_inverse(const Word& w);

/// Merges adjacent letters with equal (row, col) by adding parameters and drops
/// zero-parameter letters. Never applied implicitly.
Word normalized(const Word& w);

/// The word g1 g2 g1^-1 g2^-1.
Word commutator_word(std::size_t n, const ElemGen& g1, const ElemGen& g2);

/// Returned for opposite roots e_{ij}, e_{ji}, which have no elementary
/// commutator formula.
struct NoCommutatorFormula {
  friend bool operator==(const NoCommutatorFormula&, const NoCommutatorFormula&) = default;
};

using CommutatorResult = std::variant<Word, NoCommutatorFormula>;

/// Closed form of [g1, g2] = g1 g2 g1^-1 g2^-1:
///   [e_ij(a), e_jl(b)] = e_il(ab)          (i != l)
///   [e_ij(a), e_ki(b)] = e_kj(-ab)         (j != k)
///   [e_ij(a), e_kl(b)] = 1                  (j != k, i != l)
/// and NoCommutatorFormula for e_ij against e_ji.
CommutatorResult chevalley_commutator(std::size_t n, const ElemGen& g1, const ElemGen& g2);

/// Membership in S = {e_ij(+-1), e_ij(+-x_t)}.
bool in_standard_genset(const ElemGen& g);
/// All of S for the given dimension and ring, in (row, col, param) order.
std::vector<ElemGen> standard_genset(std::size_t n, const Ring& ring);

/// Largest |coefficient| expanded by plain repetition in rewriting.
inline constexpr long kRepeatLimit = 16;

/// Rewrites e_ij(a) as a word over S.
///
/// Terms of a are handled one at a time (root-subgroup additivity) in
/// descending lexicographic order. A term c * x_t1 * m with further variables m
/// becomes [e_ip(x_t1), e_pj(c * m)] with spare index p (smallest not in
/// {i, j}); degree <= 1 terms become |c| copies of e_ij(+-1) or e_ij(+-x_t).
/// When |c| > 16 the coefficient is split into powers of two and each
/// e(2^k) is built as [e_ip(2^k1), e_pj(2^k2)] with k1 = floor(k/2),
/// k2 = k - k1, bottoming out at repetition once 2^k <= 16; a non-constant
/// monomial then becomes [e_ip(c), e_pj(m)]. Over Z/m the representative of
/// smallest absolute value is used. Requires n >= 3.
Word rewrite_over_finite_genset(const ElemGen& g, std::size_t n);

/// Distinct parameters in order of first appearance (the unit 1 is implicit).
std::vector<RingElem> minimal_subring_generators(const Word& w);

}  // namespace chevbg

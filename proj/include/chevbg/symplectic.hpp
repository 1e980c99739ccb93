#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chevbg/matrix.hpp"
#include "chevbg/poly.hpp"

namespace chevbg {

// Elementary symplectic generators in Sp(2n, A) for the form
// J = [[0, I_n], [-I_n, 0]]. Coordinates 1..n are the first block and
// n+1..2n the second.
enum class SpKind {
  Linear,      // I + a E_{i,j} - a E_{j+n,i+n}
  LongUpper,   // I + a E_{i,i+n}
  LongLower,   // I + a E_{i+n,i}
  MixedUpper,  // I + a (E_{i,j+n} + E_{j,i+n})
  MixedLower,  // I + a (E_{j+n,i} + E_{i+n,j})
};

/// `j` is unused (0) for the long kinds. Indices are 1-based.
struct SpGen {
  SpKind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  RingElem param;

  SpGen(SpKind k, std::size_t i_, std::size_t j_, RingElem a)
      : kind(k), i(i_), j(j_), param(std::move(a)) {}

  SpGen inverse() const { return SpGen(kind, i, j, -param); }
  SpGen with_param(RingElem a) const { return SpGen(kind, i, j, std::move(a)); }
  friend bool operator==(const SpGen&, const SpGen&) = default;
};

bool is_long(SpKind k);

/// Word of symplectic generators with half-dimension n >= 2.
class SpWord {
 public:
  SpWord(std::size_t n, Ring ring);

  std::size_t half_dim() const noexcept { return n_; }
  const Ring& ring() const noexcept { return ring_; }
  const std::vector<SpGen>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  void push_back(SpGen g);

 private:
  std::size_t n_;
  Ring ring_;
  std::vector<SpGen> gens_;
};

void check_sp_gen(const SpGen& g, std::size_t n);

/// 2n x 2n matrix of the generator.
SqMatrix sp_elem_matrix(const SpGen& g, std::size_t n);
SqMatrix sp_word_eval(const SpWord& w);
SpWord sp_word_inverse(const SpWord& w);

/// J = [[0, I_n], [-I_n, 0]].
SqMatrix symplectic_form(std::size_t n, const Ring& ring);

/// M^T J M == J.
bool preserves_form(const SqMatrix& m);

struct SpFuzzReport {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t form_failures = 0;
  std::size_t det_failures = 0;
  std::size_t inverse_failures = 0;
  std::size_t additivity_failures = 0;
  std::size_t max_word_length = 0;
};

/// Each trial draws a product of 1..max_length random generators over `ring`
/// and checks M^T J M = J, det M = 1, that the inverse word inverts, and
/// parameter additivity M(a) M(b) = M(a+b) for one random generator.
SpFuzzReport sp_relations_fuzz(std::size_t n, const Ring& ring, std::uint64_t seed,
                               std::size_t trials, std::size_t max_length = 10);

}  // namespace chevbg

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "chevbg/matrix.hpp"

namespace chevbg {

/// Dense n x n integer matrix; value type of the derivation cocycle.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n);
  static IntMatrix identity(std::size_t n);
  /// Matrix unit E_{r,c}, 1-based.
  static IntMatrix unit(std::size_t n, std::size_t r, std::size_t c);

  std::size_t dim() const noexcept { return n_; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const mpz_class& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  bool is_zero() const;
  /// max |entry|
  mpz_class max_abs() const;
  std::vector<std::vector<std::string>> rows() const;

 private:
  std::size_t n_;
  std::vector<mpz_class> entries_;
};

using CocycleValue = IntMatrix;

/// Entrywise x := 0. Input must be over Z[x] (one variable, integer coefficients).
SqMatrix reduce_at_zero(const SqMatrix& g);

/// reduce_at_zero as an integer matrix (pi in the identities below).
IntMatrix reduce_at_zero_int(const SqMatrix& g);

/// c(g) = g'|_{x=0}, entrywise. Satisfies c(gh) = c(g) pi(h) + pi(g) c(h).
CocycleValue derivation_cocycle(const SqMatrix& g);

/// g lies in the congruence kernel iff pi(g) = I.
bool in_congruence_kernel(const SqMatrix& g);

using CocycleMap = std::function<CocycleValue(const SqMatrix&)>;
using SamplePair = std::pair<SqMatrix, SqMatrix>;

/// max over samples of || c(gh) - c(g) pi(h) - pi(g) c(h) ||_max; 0 for no samples.
mpz_class cocycle_defect(const CocycleMap& map, std::span<const SamplePair> samples);

}  // namespace chevbg

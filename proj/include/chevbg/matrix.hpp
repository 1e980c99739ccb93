#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chevbg/poly.hpp"

namespace chevbg {

/// Dense n x n matrix over A (2 <= n <= 12), stored row-major. Indices are 0-based.
class SqMatrix {
 public:
  static constexpr std::size_t kMinDim = 2;
  static constexpr std::size_t kMaxDim = 12;

  /// Zero matrix.
  SqMatrix(std::size_t n, const Ring& ring);
  static SqMatrix identity(std::size_t n, const Ring& ring);

  std::size_t dim() const noexcept { return n_; }
  const Ring& ring() const noexcept { return ring_; }

  const RingElem& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  void set(std::size_t r, std::size_t c, RingElem value);
  /// entry(r, c) += value
  void add_to(std::size_t r, std::size_t c, const RingElem& value);

  const std::vector<RingElem>& entries() const noexcept { return entries_; }

  bool is_identity() const;
  SqMatrix transposed() const;

  friend SqMatrix operator*(const SqMatrix& a, const SqMatrix& b);
  friend SqMatrix operator+(const SqMatrix& a, const SqMatrix& b);
  friend SqMatrix operator-(const SqMatrix& a, const SqMatrix& b);
  friend bool operator==(const SqMatrix& a, const SqMatrix& b) {
    return a.n_ == b.n_ && a.ring_ == b.ring_ && a.entries_ == b.entries_;
  }

  /// Rows of canonical polynomial strings, one row per line, entries separated by ", ".
  std::string to_string() const;

 private:
  std::size_t n_;
  Ring ring_;
  std::vector<RingElem> entries_;
};

/// Exact product; throws IncompatibleRing on dimension or ring mismatch.
SqMatrix mat_mul(const SqMatrix& a, const SqMatrix& b);

/// Exact determinant: cofactor expansion for n <= 4, fraction-free Bareiss
/// elimination (over Z, then reduced for Z/m) above that.
RingElem mat_det(const SqMatrix& a);

/// Cofactor expansion along the first row at any size. Exponential; used as an
/// independent check of mat_det.
RingElem cofactor_det(const SqMatrix& a);

/// Bareiss elimination at any size.
RingElem bareiss_det(const SqMatrix& a);

}  // namespace chevbg

#include "chevbg/matrix.hpp"

#include <sstream>
#include <utility>

#include "chevbg/errors.hpp"

namespace chevbg {

SqMatrix::SqMatrix(std::size_t n, const Ring& ring)
    : n_(n), ring_(ring), entries_(n * n, RingElem::zero(ring)) {
  if (n < kMinDim || n > kMaxDim) {
    throw Unsupported("matrix dimension " + std::to_string(n) + " outside [2, 12]");
  }
}

SqMatrix SqMatrix::identity(std::size_t n, const Ring& ring) {
  SqMatrix m(n, ring);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = RingElem::one(ring);
  return m;
}

void SqMatrix::set(std::size_t r, std::size_t c, RingElem value) {
  if (r >= n_ || c >= n_) throw IndexError("matrix index out of range");
  if (!(value.ring() == ring_)) throw IncompatibleRing("matrix entry from another ring");
  entries_[r * n_ + c] = std::move(value);
}

void SqMatrix::add_to(std::size_t r, std::size_t c, const RingElem& value) {
  if (r >= n_ || c >= n_) throw IndexError("matrix index out of range");
  entries_[r * n_ + c] += value;
}

bool SqMatrix::is_identity() const {
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      const RingElem& e = (*this)(r, c);
      if (r == c ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

SqMatrix SqMatrix::transposed() const {
  SqMatrix t(n_, ring_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t.entries_[c * n_ + r] = (*this)(r, c);
  return t;
}

namespace {
void check_same_shape(const SqMatrix& a, const SqMatrix& b) {
  if (a.dim() != b.dim()) {
    throw IncompatibleRing("matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                           std::to_string(b.dim()));
  }
  if (!(a.ring() == b.ring())) throw IncompatibleRing("matrix ring mismatch");
}
}  // namespace

SqMatrix operator*(const SqMatrix& a, const SqMatrix& b) {
  check_same_shape(a, b);
  const std::size_t n = a.n_;
  SqMatrix p(n, a.ring_);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const RingElem& ark = a(r, k);
      if (ark.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const RingElem& bkc = b(k, c);
        if (bkc.is_zero()) continue;
        p.entries_[r * n + c] += ark * bkc;
      }
    }
  }
  return p;
}

SqMatrix operator+(const SqMatrix& a, const SqMatrix& b) {
  check_same_shape(a, b);
  SqMatrix s = a;
  for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] += b.entries_[i];
  return s;
}

SqMatrix operator-(const SqMatrix& a, const SqMatrix& b) {
  check_same_shape(a, b);
  SqMatrix s = a;
  for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] -= b.entries_[i];
  return s;
}

std::string SqMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (c > 0) out << ", ";
      out << (*this)(r, c).to_string();
    }
    out << '\n';
  }
  return out.str();
}

SqMatrix mat_mul(const SqMatrix& a, const SqMatrix& b) { return a * b; }

namespace {

using Grid = std::vector<std::vector<RingElem>>;

RingElem cofactor_rec(const Grid& m, const Ring& ring) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  RingElem det = RingElem::zero(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    Grid minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<RingElem> row;
      row.reserve(n - 1);
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    RingElem term = m[0][c] * cofactor_rec(minor, ring);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

Grid to_grid(const SqMatrix& a) {
  Grid g(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) g[r].push_back(a(r, c));
  return g;
}

// Bareiss over Z[x]: every division by the previous pivot is exact.
RingElem bareiss_over_integers(Grid m, const Ring& ring) {
  const std::size_t n = m.size();
  RingElem prev = RingElem::one(ring);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return RingElem::zero(ring);
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = RingElem::zero(ring);
    }
    prev = m[k][k];
  }
  RingElem det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

RingElem cofactor_det(const SqMatrix& a) { return cofactor_rec(to_grid(a), a.ring()); }

RingElem bareiss_det(const SqMatrix& a) {
  const CoeffSpec coeff = a.ring().coeff;
  if (coeff.is_integers()) return bareiss_over_integers(to_grid(a), a.ring());
  // The determinant is an integer polynomial in the entries, so computing it on
  // integer lifts and reducing afterwards is exact.
  const Ring lifted{CoeffSpec::integers(), a.ring().vars};
  Grid g = to_grid(a);
  for (auto& row : g)
    for (auto& e : row) e = e.coerced(CoeffSpec::integers());
  return bareiss_over_integers(std::move(g), lifted).coerced(coeff);
}

RingElem mat_det(const SqMatrix& a) {
  if (a.dim() <= 4) return cofactor_det(a);
  return bareiss_det(a);
}

}  // namespace chevbg

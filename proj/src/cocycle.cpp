#include "chevbg/cocycle.hpp"

#include <map>

#include "chevbg/errors.hpp"

namespace chevbg {

IntMatrix::IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::unit(std::size_t n, std::size_t r, std::size_t c) {
  if (r < 1 || r > n || c < 1 || c > n) throw IndexError("matrix unit index out of range");
  IntMatrix m(n);
  m(r - 1, c - 1) = 1;
  return m;
}

namespace {
void same_dim(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw IncompatibleRing("integer matrix dimension mismatch");
}
}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  same_dim(a, b);
  IntMatrix s = a;
  for (std::size_t t = 0; t < s.entries_.size(); ++t) s.entries_[t] += b.entries_[t];
  return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  same_dim(a, b);
  IntMatrix s = a;
  for (std::size_t t = 0; t < s.entries_.size(); ++t) s.entries_[t] -= b.entries_[t];
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  same_dim(a, b);
  const std::size_t n = a.n_;
  IntMatrix p(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < n; ++c) p(r, c) += a(r, k) * b(k, c);
    }
  return p;
}

IntMatrix operator*(const mpz_class& s, const IntMatrix& a) {
  IntMatrix p = a;
  for (auto& e : p.entries_) e *= s;
  return p;
}

bool IntMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

mpz_class IntMatrix::max_abs() const {
  mpz_class best = 0;
  for (const auto& e : entries_)
    if (abs(e) > best) best = abs(e);
  return best;
}

std::vector<std::vector<std::string>> IntMatrix::rows() const {
  std::vector<std::vector<std::string>> out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out[r].push_back((*this)(r, c).get_str());
  return out;
}

namespace {

void require_univariate_integer(const SqMatrix& g) {
  if (!g.ring().coeff.is_integers() || g.ring().vars != 1) {
    throw Unsupported("the derivation cocycle is defined on matrices over Z[x] (one variable, "
                      "integer coefficients); got " + g.ring().coeff.to_string() + " with " +
                      std::to_string(g.ring().vars) + " variables");
  }
}

}  // namespace

SqMatrix reduce_at_zero(const SqMatrix& g) {
  require_univariate_integer(g);
  SqMatrix out(g.dim(), g.ring());
  for (std::size_t r = 0; r < g.dim(); ++r)
    for (std::size_t c = 0; c < g.dim(); ++c)
      out.set(r, c, RingElem::constant(g.ring(), g(r, c).constant_term()));
  return out;
}

IntMatrix reduce_at_zero_int(const SqMatrix& g) {
  require_univariate_integer(g);
  IntMatrix out(g.dim());
  for (std::size_t r = 0; r < g.dim(); ++r)
    for (std::size_t c = 0; c < g.dim(); ++c) out(r, c) = g(r, c).constant_term();
  return out;
}

CocycleValue derivation_cocycle(const SqMatrix& g) {
  require_univariate_integer(g);
  IntMatrix out(g.dim());
  const std::map<std::size_t, RingElem> at_zero{{0, RingElem::zero(g.ring())}};
  for (std::size_t r = 0; r < g.dim(); ++r)
    for (std::size_t c = 0; c < g.dim(); ++c)
      out(r, c) = substitute(derivative(g(r, c), 0), at_zero).constant_term();
  return out;
}

bool in_congruence_kernel(const SqMatrix& g) {
  return reduce_at_zero_int(g) == IntMatrix::identity(g.dim());
}

mpz_class cocycle_defect(const CocycleMap& map, std::span<const SamplePair> samples) {
  mpz_class defect = 0;
  for (const auto& [g, h] : samples) {
    const IntMatrix err =
        map(g * h) - map(g) * reduce_at_zero_int(h) - reduce_at_zero_int(g) * map(h);
    const mpz_class e = err.max_abs();
    if (e > defect) defect = e;
  }
  return defect;
}

}  // namespace chevbg

#pragma once

// Helpers and test-only oracles. Nothing here calls the library's arithmetic
// except to read terms out of a RingElem.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "chevbg/chevalley.hpp"
#include "chevbg/matrix.hpp"
#include "chevbg/poly.hpp"
#include "chevbg/word_io.hpp"

namespace testing {

inline chevbg::Ring zx(std::size_t k = 1) { return {chevbg::CoeffSpec::integers(), k}; }
inline chevbg::Ring zmod(std::uint64_t m, std::size_t k = 1) {
  return {chevbg::CoeffSpec::modular(m), k};
}

inline chevbg::RingElem P(const std::string& text, const chevbg::Ring& ring = zx()) {
  return chevbg::parse_poly(text, ring);
}

inline chevbg::Word W(const std::string& text, std::size_t n = 3,
                      const chevbg::Ring& ring = zx()) {
  return chevbg::parse_word(text, n, ring);
}

/// Evaluates p at an integer point straight from its term map.
inline mpz_class eval_at(const chevbg::RingElem& p, const std::vector<long>& point) {
  mpz_class sum = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_class term = c;
    for (std::size_t t = 0; t < e.size(); ++t) {
      mpz_class x = point[t];
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), e[t]);
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

using IntGrid = std::vector<std::vector<mpz_class>>;

inline IntGrid eval_matrix(const chevbg::SqMatrix& m, const std::vector<long>& point) {
  IntGrid g(m.dim(), std::vector<mpz_class>(m.dim()));
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) g[r][c] = eval_at(m(r, c), point);
  return g;
}

/// Leibniz formula: sum over all permutations, sign by inversion count.
inline mpz_class permutation_det(const IntGrid& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  mpz_class det = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    mpz_class prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod *= a[i][perm[i]];
    det += inversions % 2 == 0 ? prod : mpz_class(-prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Dense univariate convolution over Z.
inline std::vector<mpz_class> dense(const chevbg::RingElem& p) {
  std::vector<mpz_class> out(p.total_degree() + 1);
  for (const auto& [e, c] : p.terms()) out[e[0]] += c;
  return out;
}

inline std::vector<mpz_class> convolve(const std::vector<mpz_class>& a,
                                       const std::vector<mpz_class>& b) {
  std::vector<mpz_class> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace testing

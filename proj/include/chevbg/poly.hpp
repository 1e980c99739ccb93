#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace chevbg {

/// Coefficient ring R0: the integers (modulus 0) or Z/m with m >= 2.
class CoeffSpec {
 public:
  static CoeffSpec integers() { return CoeffSpec{}; }
  static CoeffSpec modular(std::uint64_t m);

  bool is_integers() const noexcept { return modulus_ == 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  /// Brings an integer into canonical form ([0, m) for Z/m, unchanged over Z).
  mpz_class reduce(mpz_class c) const;

  /// "Z" or "Z/m".
  std::string to_string() const;
  static CoeffSpec parse(std::string_view text);

  friend bool operator==(const CoeffSpec&, const CoeffSpec&) = default;

 private:
  std::uint64_t modulus_ = 0;
};

/// A = R0[x1, ..., xk].
struct Ring {
  CoeffSpec coeff;
  std::size_t vars = 0;

  friend bool operator==(const Ring&, const Ring&) = default;
};

using Exponents = std::vector<std::uint32_t>;

/// Sparse polynomial in A. Terms are keyed by exponent vectors in lexicographic
/// order (x1 most significant); no stored coefficient is zero.
class RingElem {
 public:
  using TermMap = std::map<Exponents, mpz_class>;

  explicit RingElem(Ring ring);

  static RingElem zero(const Ring& ring) { return RingElem(ring); }
  static RingElem constant(const Ring& ring, const mpz_class& c);
  static RingElem one(const Ring& ring) { return constant(ring, 1); }
  /// x_{index+1}; `index` is 0-based.
  static RingElem variable(const Ring& ring, std::size_t index);
  static RingElem monomial(const Ring& ring, Exponents exps, const mpz_class& c);

  const Ring& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const;
  /// Coefficient of the monomial 1.
  mpz_class constant_term() const;
  mpz_class coefficient(const Exponents& exps) const;
  std::uint32_t total_degree() const;

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& rhs);
  RingElem& operator-=(const RingElem& rhs);
  RingElem& operator*=(const RingElem& rhs);
  friend RingElem operator+(RingElem lhs, const RingElem& rhs) { return lhs += rhs; }
  friend RingElem operator-(RingElem lhs, const RingElem& rhs) { return lhs -= rhs; }
  friend RingElem operator*(const RingElem& lhs, const RingElem& rhs);
  RingElem scaled(const mpz_class& c) const;
  RingElem pow(std::uint32_t e) const;

  /// Same terms reinterpreted over another coefficient ring with the same
  /// variable count (coefficients reduced into canonical form).
  RingElem coerced(const CoeffSpec& target) const;

  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  /// Canonical text: terms in descending lexicographic order, e.g. "x1^2-3*x1*x2+5".
  std::string to_string() const;

 private:
  void add_term(const Exponents& exps, const mpz_class& c);
  void check_compatible(const RingElem& other) const;

  Ring ring_;
  TermMap terms_;
};

/// Total order on canonical forms (ring first, then terms); used for
/// deterministic sets of ring elements.
bool canonical_less(const RingElem& a, const RingElem& b);

/// Substitutes x_{idx+1} := value for each entry; unassigned variables stay symbolic.
RingElem substitute(const RingElem& p, const std::map<std::size_t, RingElem>& assignment);

/// Formal partial derivative with respect to x_{var+1}.
RingElem derivative(const RingElem& p, std::size_t var);

/// Exact quotient p / q over Z[x1..xk]; throws if q does not divide p.
RingElem exact_quotient(const RingElem& p, const RingElem& q);

/// Parses the polynomial grammar: integer literals, x1..xk, + - * ^, parentheses.
/// Multiplication must be written explicitly. Columns in errors are offset by
/// `column_offset`.
RingElem parse_poly(std::string_view text, const Ring& ring, std::size_t line = 1,
                    std::size_t column_offset = 0);

}  // namespace chevbg

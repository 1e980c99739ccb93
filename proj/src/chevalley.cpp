#include "chevbg/chevalley.hpp"

#include <algorithm>

#include "chevbg/errors.hpp"

namespace chevbg {

Word::Word(std::size_t n, Ring ring) : n_(n), ring_(ring) {}

Word::Word(std::size_t n, Ring ring, std::vector<ElemGen> gens) : n_(n), ring_(ring) {
  gens_.reserve(gens.size());
  for (auto& g : gens) push_back(std::move(g));
}

void Word::check(const ElemGen& g) const {
  if (g.row < 1 || g.row > n_ || g.col < 1 || g.col > n_) {
    throw IndexError("generator E(" + std::to_string(g.row) + "," + std::to_string(g.col) +
                     ") outside dimension " + std::to_string(n_));
  }
  if (g.row == g.col) throw IndexError("generator E(i,i) is not elementary");
  if (!(g.param.ring() == ring_)) throw IncompatibleRing("generator parameter from another ring");
}

void Word::push_back(ElemGen g) {
  check(g);
  gens_.push_back(std::move(g));
}

void Word::append(const Word& other) {
  if (other.n_ != n_) throw IncompatibleRing("word dimension mismatch");
  if (!(other.ring_ == ring_)) throw IncompatibleRing("word ring mismatch");
  gens_.insert(gens_.end(), other.gens_.begin(), other.gens_.end());
}

SqMatrix elem_matrix(const ElemGen& g, std::size_t n) {
  if (g.row < 1 || g.row > n || g.col < 1 || g.col > n || g.row == g.col) {
    throw IndexError("generator E(" + std::to_string(g.row) + "," + std::to_string(g.col) +
                     ") invalid for dimension " + std::to_string(n));
  }
  SqMatrix m = SqMatrix::identity(n, g.param.ring());
  m.set(g.row - 1, g.col - 1, g.param);
  return m;
}

SqMatrix word_eval(const Word& w) {
  // Right multiplication by e_ij(a) adds a * (column i) to column j.
  SqMatrix m = SqMatrix::identity(w.dim(), w.ring());
  for (const auto& g : w.gens()) {
    if (g.param.is_zero()) continue;
    const std::size_t i = g.row - 1;
    const std::size_t j = g.col - 1;
    for (std::size_t r = 0; r < w.dim(); ++r) {
      if (!m(r, i).is_zero()) m.add_to(r, j, m(r, i) * g.param);
    }
  }
  return m;
}

Word word_inverse(const Word& w) {
  Word inv(w.dim(), w.ring());
  for (auto it = w.gens().rbegin(); it != w.gens().rend(); ++it) inv.push_back(it->inverse());
  return inv;
}

Word normalized(const Word& w) {
  std::vector<ElemGen> out;
  for (const auto& g : w.gens()) {
    if (!out.empty() && out.back().row == g.row && out.back().col == g.col) {
      out.back().param += g.param;
      if (out.back().param.is_zero()) out.pop_back();
    } else if (!g.param.is_zero()) {
      out.push_back(g);
    }
  }
  return Word(w.dim(), w.ring(), std::move(out));
}

Word commutator_word(std::size_t n, const ElemGen& g1, const ElemGen& g2) {
  return Word(n, g1.param.ring(), {g1, g2, g1.inverse(), g2.inverse()});
}

CommutatorResult chevalley_commutator(std::size_t n, const ElemGen& g1, const ElemGen& g2) {
  if (n < 3) throw Unsupported("commutator relations need n >= 3");
  const Ring& ring = g1.param.ring();
  Word probe(n, ring);
  probe.push_back(g1);
  probe.push_back(g2);  // range and ring checks

  const bool chain = g1.col == g2.row;      // e_ij, e_jl
  const bool back_chain = g1.row == g2.col;  // e_ij, e_ki
  if (chain && back_chain) return NoCommutatorFormula{};
  if (chain) return Word(n, ring, {ElemGen(g1.row, g2.col, g1.param * g2.param)});
  if (back_chain) return Word(n, ring, {ElemGen(g2.row, g1.col, -(g1.param * g2.param))});
  return Word(n, ring);
}

bool in_standard_genset(const ElemGen& g) {
  const RingElem& a = g.param;
  if (a.terms().size() != 1) return false;
  const auto& [e, c] = *a.terms().begin();
  const mpz_class minus_one = a.ring().coeff.reduce(-1);
  if (c != 1 && c != minus_one) return false;
  std::uint32_t deg = 0;
  for (auto x : e) deg += x;
  return deg <= 1;
}

std::vector<ElemGen> standard_genset(std::size_t n, const Ring& ring) {
  std::vector<RingElem> params{RingElem::one(ring), -RingElem::one(ring)};
  for (std::size_t t = 0; t < ring.vars; ++t) {
    params.push_back(RingElem::variable(ring, t));
    params.push_back(-RingElem::variable(ring, t));
  }
  std::vector<ElemGen> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i != j)
        for (const auto& p : params) out.emplace_back(i, j, p);
  return out;
}

namespace {

std::size_t spare_index(std::size_t i, std::size_t j) {
  std::size_t p = 1;
  while (p == i || p == j) ++p;
  return p;
}

class Rewriter {
 public:
  Rewriter(std::size_t n, const Ring& ring) : n_(n), ring_(ring) {}

  Word monomial(std::size_t i, std::size_t j, const mpz_class& c, const Exponents& e) const {
    Word w(n_, ring_);
    if (c == 0) return w;
    std::uint32_t deg = 0;
    for (auto x : e) deg += x;
    const std::size_t p = spare_index(i, j);
    if (abs(c) > kRepeatLimit) {
      if (deg == 0) return doubling(i, j, c);
      return commutator(doubling(i, p, c), monomial(p, j, 1, e));
    }
    if (deg <= 1) return repeat(i, j, c, RingElem::monomial(ring_, e, 1));
    auto first = static_cast<std::size_t>(
        std::find_if(e.begin(), e.end(), [](auto x) { return x > 0; }) - e.begin());
    Exponents rest = e;
    --rest[first];
    Word head(n_, ring_, {ElemGen(i, p, RingElem::variable(ring_, first))});
    return commutator(head, monomial(p, j, c, rest));
  }

 private:
  Word repeat(std::size_t i, std::size_t j, const mpz_class& c, const RingElem& unit) const {
    Word w(n_, ring_);
    const RingElem letter = c < 0 ? -unit : unit;
    for (mpz_class k = abs(c); k > 0; --k) w.push_back(ElemGen(i, j, letter));
    return w;
  }

  Word doubling(std::size_t i, std::size_t j, const mpz_class& c) const {
    Word w(n_, ring_);
    const mpz_class mag = abs(c);
    const int sign = c < 0 ? -1 : 1;
    const auto bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
    for (std::size_t k = 0; k < bits; ++k) {
      if (mpz_tstbit(mag.get_mpz_t(), k)) w.append(power_of_two(i, j, k, sign));
    }
    return w;
  }

  // e_ij(sign * 2^k)
  Word power_of_two(std::size_t i, std::size_t j, std::size_t k, int sign) const {
    mpz_class value;
    mpz_ui_pow_ui(value.get_mpz_t(), 2, k);
    if (value <= kRepeatLimit) return repeat(i, j, sign * value, RingElem::one(ring_));
    const std::size_t p = spare_index(i, j);
    const std::size_t k1 = k / 2;
    return commutator(power_of_two(i, p, k1, 1), power_of_two(p, j, k - k1, sign));
  }

  Word commutator(const Word& x, const Word& y) const {
    Word w = x;
    w.append(y);
    w.append(word_inverse(x));
    w.append(word_inverse(y));
    return w;
  }

  std::size_t n_;
  Ring ring_;
};

}  // namespace

Word rewrite_over_finite_genset(const ElemGen& g, std::size_t n) {
  if (n < 3) throw Unsupported("rewriting over S needs a spare index (n >= 3)");
  const Ring& ring = g.param.ring();
  Word checked(n, ring);
  checked.push_back(g);

  Rewriter rw(n, ring);
  Word out(n, ring);
  const auto& terms = g.param.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    mpz_class c = it->second;
    if (!ring.coeff.is_integers()) {
      const mpz_class m(static_cast<unsigned long>(ring.coeff.modulus()));
      if (2 * c > m) c -= m;
    }
    out.append(rw.monomial(g.row, g.col, c, it->first));
  }
  return out;
}

std::vector<RingElem> minimal_subring_generators(const Word& w) {
  std::vector<RingElem> out;
  for (const auto& g : w.gens()) {
    if (std::find(out.begin(), out.end(), g.param) == out.end()) out.push_back(g.param);
  }
  return out;
}

}  // namespace chevbg

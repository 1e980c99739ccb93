#include "chevbg/symplectic.hpp"

#include <algorithm>

#include "chevbg/errors.hpp"
#include "chevbg/random.hpp"

namespace chevbg {

bool is_long(SpKind k) { return k == SpKind::LongUpper || k == SpKind::LongLower; }

void check_sp_gen(const SpGen& g, std::size_t n) {
  if (n < 2) throw Unsupported("symplectic half-dimension must be at least 2");
  if (g.i < 1 || g.i > n) throw IndexError("symplectic index i out of range");
  if (is_long(g.kind)) return;
  if (g.j < 1 || g.j > n) throw IndexError("symplectic index j out of range");
  if (g.i == g.j) throw IndexError("symplectic generator needs i != j");
}

SpWord::SpWord(std::size_t n, Ring ring) : n_(n), ring_(ring) {
  if (n < 2) throw Unsupported("symplectic half-dimension must be at least 2");
}

void SpWord::push_back(SpGen g) {
  check_sp_gen(g, n_);
  if (!(g.param.ring() == ring_)) throw IncompatibleRing("generator parameter from another ring");
  gens_.push_back(std::move(g));
}

SqMatrix sp_elem_matrix(const SpGen& g, std::size_t n) {
  check_sp_gen(g, n);
  const RingElem& a = g.param;
  SqMatrix m = SqMatrix::identity(2 * n, a.ring());
  const std::size_t i = g.i - 1;
  const std::size_t j = g.j - 1;  // meaningless for long kinds
  switch (g.kind) {
    case SpKind::Linear:
      m.add_to(i, j, a);
      m.add_to(j + n, i + n, -a);
      break;
    case SpKind::LongUpper:
      m.add_to(i, i + n, a);
      break;
    case SpKind::LongLower:
      m.add_to(i + n, i, a);
      break;
    case SpKind::MixedUpper:
      m.add_to(i, j + n, a);
      m.add_to(j, i + n, a);
      break;
    case SpKind::MixedLower:
      m.add_to(j + n, i, a);
      m.add_to(i + n, j, a);
      break;
  }
  return m;
}

SqMatrix sp_word_eval(const SpWord& w) {
  SqMatrix m = SqMatrix::identity(2 * w.half_dim(), w.ring());
  for (const auto& g : w.gens()) m = m * sp_elem_matrix(g, w.half_dim());
  return m;
}

SpWord sp_word_inverse(const SpWord& w) {
  SpWord inv(w.half_dim(), w.ring());
  for (auto it = w.gens().rbegin(); it != w.gens().rend(); ++it) inv.push_back(it->inverse());
  return inv;
}

SqMatrix symplectic_form(std::size_t n, const Ring& ring) {
  SqMatrix j(2 * n, ring);
  for (std::size_t t = 0; t < n; ++t) {
    j.set(t, t + n, RingElem::one(ring));
    j.set(t + n, t, -RingElem::one(ring));
  }
  return j;
}

bool preserves_form(const SqMatrix& m) {
  if (m.dim() % 2 != 0) return false;
  const SqMatrix j = symplectic_form(m.dim() / 2, m.ring());
  return m.transposed() * j * m == j;
}

SpFuzzReport sp_relations_fuzz(std::size_t n, const Ring& ring, std::uint64_t seed,
                               std::size_t trials, std::size_t max_length) {
  if (trials < 1) throw Error("sp_relations_fuzz needs trials >= 1");
  if (max_length < 1) throw Error("sp_relations_fuzz needs max_length >= 1");
  Rng rng(seed);
  const PolyShape shape{3, 2, 3};
  SpFuzzReport report;
  report.trials = trials;
  const SqMatrix identity = SqMatrix::identity(2 * n, ring);
  for (std::size_t t = 0; t < trials; ++t) {
    SpWord w(n, ring);
    const auto len = rng.uniform(1, static_cast<std::int64_t>(max_length));
    for (std::int64_t k = 0; k < len; ++k) w.push_back(random_sp_gen(rng, n, ring, shape));
    report.max_word_length = std::max(report.max_word_length, w.size());

    const SqMatrix m = sp_word_eval(w);
    bool ok = true;
    if (!preserves_form(m)) {
      ++report.form_failures;
      ok = false;
    }
    if (!mat_det(m).is_one()) {
      ++report.det_failures;
      ok = false;
    }
    if (!(sp_word_eval(sp_word_inverse(w)) * m == identity)) {
      ++report.inverse_failures;
      ok = false;
    }
    const SpGen g = random_sp_gen(rng, n, ring, shape);
    const RingElem b = random_poly(rng, ring, shape);
    if (!(sp_elem_matrix(g, n) * sp_elem_matrix(g.with_param(b), n) ==
          sp_elem_matrix(g.with_param(g.param + b), n))) {
      ++report.additivity_failures;
      ok = false;
    }
    ok ? ++report.passed : ++report.failed;
  }
  return report;
}

}  // namespace chevbg

#include "chevbg/random.hpp"

#include <limits>

namespace chevbg {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

RingElem random_poly(Rng& rng, const Ring& ring, const PolyShape& shape) {
  RingElem p = RingElem::zero(ring);
  const auto terms = rng.uniform(1, static_cast<std::int64_t>(shape.max_terms));
  for (std::int64_t t = 0; t < terms; ++t) {
    Exponents e(ring.vars, 0);
    if (ring.vars > 0) {
      auto budget = static_cast<std::uint32_t>(rng.uniform(0, shape.max_degree));
      while (budget-- > 0) ++e[static_cast<std::size_t>(rng.uniform(0, ring.vars - 1))];
    }
    const auto c = rng.uniform(-shape.max_coeff, shape.max_coeff);
    p += RingElem::monomial(ring, std::move(e), c);
  }
  return p;
}

ElemGen random_elem_gen(Rng& rng, std::size_t n, const Ring& ring, const PolyShape& shape) {
  const auto i = static_cast<std::size_t>(rng.uniform(1, n));
  auto j = static_cast<std::size_t>(rng.uniform(1, n - 1));
  if (j >= i) ++j;
  return ElemGen(i, j, random_poly(rng, ring, shape));
}

Word random_word(Rng& rng, std::size_t n, const Ring& ring, std::size_t max_length,
                 const PolyShape& shape) {
  Word w(n, ring);
  const auto len = rng.uniform(0, static_cast<std::int64_t>(max_length));
  for (std::int64_t t = 0; t < len; ++t) w.push_back(random_elem_gen(rng, n, ring, shape));
  return w;
}

SpGen random_sp_gen(Rng& rng, std::size_t n, const Ring& ring, const PolyShape& shape) {
  const auto kind = static_cast<SpKind>(rng.uniform(0, 4));
  const auto i = static_cast<std::size_t>(rng.uniform(1, n));
  std::size_t j = 0;
  if (!is_long(kind)) {
    j = static_cast<std::size_t>(rng.uniform(1, n - 1));
    if (j >= i) ++j;
  }
  return SpGen(kind, i, j, random_poly(rng, ring, shape));
}

}  // namespace chevbg

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "chevbg/chevalley.hpp"
#include "chevbg/poly.hpp"
#include "chevbg/symplectic.hpp"

namespace chevbg {

/// Seeded source for every random draw in the library and CLI. Bounded draws
/// use rejection sampling on the raw 64-bit stream so results do not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

struct PolyShape {
  std::size_t max_terms = 3;
  std::uint32_t max_degree = 2;
  std::int64_t max_coeff = 3;
};

/// Up to `max_terms` terms (possibly colliding), each of total degree at most
/// `max_degree` with coefficient in [-max_coeff, max_coeff].
RingElem random_poly(Rng& rng, const Ring& ring, const PolyShape& shape);

ElemGen random_elem_gen(Rng& rng, std::size_t n, const Ring& ring, const PolyShape& shape);

/// Length drawn uniformly from [0, max_length].
Word random_word(Rng& rng, std::size_t n, const Ring& ring, std::size_t max_length,
                 const PolyShape& shape);

SpGen random_sp_gen(Rng& rng, std::size_t n, const Ring& ring, const PolyShape& shape);

}  // namespace chevbg

#pragma once

#include <string>
#include <string_view>

#include "chevbg/factorization.hpp"

namespace chevbg {

inline constexpr int kSchemaVersion = 1;

/// Witness document, fields in this order:
///   schema, dimension, ring {k, coeff}, target (n*n canonical polynomials,
///   row-major), word (generator tokens), claimed_bound, verified.
/// Two-space indentation, trailing newline.
std::string witness_to_json(const FactorizationWitness& wit);

/// Inverse of witness_to_json; `verified` is read back as stored. Throws
/// ParseError for malformed JSON and Error for schema violations.
FactorizationWitness witness_from_json(std::string_view text);

}  // namespace chevbg

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chevbg/chevalley.hpp"
#include "chevbg/symplectic.hpp"

namespace chevbg {

// Word grammar: whitespace-separated tokens
//   E(i,j;poly)                     type A
//   SpL(i,j;poly) SpU(i;poly) SpD(i;poly) SpM+(i,j;poly) SpM-(i,j;poly)
// Polynomials may contain parentheses and spaces.

using GenToken = std::variant<ElemGen, SpGen>;

struct LocatedToken {
  GenToken gen;
  std::size_t column = 0;  // 1-based start of the token
};

/// Parses tokens without range-checking indices against a dimension.
std::vector<LocatedToken> parse_generator_tokens(std::string_view text, const Ring& ring,
                                                 std::size_t line = 1);

/// Type-A word in dimension n; symplectic tokens and out-of-range indices are
/// reported as ParseError at the offending token.
Word parse_word(std::string_view text, std::size_t n, const Ring& ring, std::size_t line = 1);

/// Symplectic word with half-dimension n.
SpWord parse_sp_word(std::string_view text, std::size_t n, const Ring& ring,
                     std::size_t line = 1);

/// True when the text contains at least one symplectic token.
bool mentions_symplectic(std::string_view text);

std::string format_gen(const ElemGen& g);
std::string format_gen(const SpGen& g);
std::string format_word(const Word& w);
std::string format_word(const SpWord& w);

}  // namespace chevbg

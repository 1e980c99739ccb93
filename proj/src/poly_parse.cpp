#include <cctype>
#include <limits>

#include "chevbg/errors.hpp"
#include "chevbg/poly.hpp"

namespace chevbg {
namespace {

// expr   := term (('+' | '-') term)*
// term   := unary ('*' unary)*
// unary  := '-' unary | power
// power  := atom ('^' digits)?
// atom   := digits | 'x' digits | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring, std::size_t line, std::size_t offset)
      : text_(text), ring_(ring), line_(line), offset_(offset) {}

  RingElem parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    RingElem r = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, offset_ + pos_ + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  RingElem expr() {
    RingElem acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RingElem term() {
    RingElem acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  RingElem unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RingElem power() {
    RingElem base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t at = pos_;
      std::string d = digits();
      mpz_class e(d);
      if (e > std::numeric_limits<std::uint32_t>::max()) {
        pos_ = at;
        fail("exponent too large");
      }
      return base.pow(static_cast<std::uint32_t>(e.get_ui()));
    }
    return base;
  }

  RingElem atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RingElem::constant(ring_, mpz_class(digits()));
    }
    if (c == 'x') {
      std::size_t at = pos_;
      ++pos_;
      std::string d = digits();
      mpz_class idx(d);
      if (idx < 1 || idx > ring_.vars) {
        pos_ = at;
        fail("unknown variable x" + d + " (ring has x1..x" + std::to_string(ring_.vars) + ")");
      }
      return RingElem::variable(ring_, idx.get_ui() - 1);
    }
    if (c == '(') {
      ++pos_;
      RingElem inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElem parse_poly(std::string_view text, const Ring& ring, std::size_t line,
                    std::size_t column_offset) {
  return PolyParser(text, ring, line, column_offset).parse();
}

}  // namespace chevbg

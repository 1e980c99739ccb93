#include "chevbg/word_io.hpp"

#include <cctype>

#include "chevbg/errors.hpp"

namespace chevbg {
namespace {

struct KindInfo {
  std::string_view name;
  bool symplectic;
  SpKind kind;
  std::size_t arity;
};

constexpr KindInfo kKinds[] = {
    {"E", false, SpKind::Linear, 2},         {"SpL", true, SpKind::Linear, 2},
    {"SpU", true, SpKind::LongUpper, 1},     {"SpD", true, SpKind::LongLower, 1},
    {"SpM+", true, SpKind::MixedUpper, 2},   {"SpM-", true, SpKind::MixedLower, 2},
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class TokenScanner {
 public:
  TokenScanner(std::string_view text, const Ring& ring, std::size_t line)
      : text_(text), ring_(ring), line_(line) {}

  std::vector<LocatedToken> run() {
    std::vector<LocatedToken> out;
    for (;;) {
      while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
      if (pos_ >= text_.size()) return out;
      out.push_back(token());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, line_, at + 1);
  }

  LocatedToken token() {
    const std::size_t start = pos_;
    const std::size_t open = text_.find('(', pos_);
    if (open == std::string_view::npos) fail("expected generator token like E(i,j;poly)", start);
    const std::string_view name = text_.substr(start, open - start);
    const KindInfo* info = nullptr;
    for (const auto& k : kKinds)
      if (k.name == name) info = &k;
    if (info == nullptr) fail("unknown generator '" + std::string(name) + "'", start);

    std::size_t depth = 0;
    std::size_t close = open;
    for (; close < text_.size(); ++close) {
      if (text_[close] == '(') ++depth;
      if (text_[close] == ')' && --depth == 0) break;
    }
    if (close >= text_.size()) fail("unbalanced parentheses in generator", start);
    const std::size_t semi = text_.find(';', open);
    if (semi == std::string_view::npos || semi > close) fail("expected ';' before parameter", open);

    std::vector<std::size_t> indices;
    std::size_t p = open + 1;
    for (;;) {
      while (p < semi && is_space(text_[p])) ++p;
      std::size_t d = p;
      std::size_t value = 0;
      while (d < semi && std::isdigit(static_cast<unsigned char>(text_[d]))) {
        value = value * 10 + static_cast<std::size_t>(text_[d] - '0');
        if (value > 1000000) fail("index too large", p);
        ++d;
      }
      if (d == p) fail("expected index", p);
      indices.push_back(value);
      p = d;
      while (p < semi && is_space(text_[p])) ++p;
      if (p == semi) break;
      if (text_[p] != ',') fail("expected ',' or ';'", p);
      ++p;
    }
    if (indices.size() != info->arity) {
      fail(std::string(info->name) + " takes " + std::to_string(info->arity) + " index(es)", open);
    }
    RingElem param = parse_poly(text_.substr(semi + 1, close - semi - 1), ring_, line_, semi + 1);
    pos_ = close + 1;
    if (pos_ < text_.size() && !is_space(text_[pos_])) fail("expected whitespace between tokens", pos_);

    const std::size_t i = indices[0];
    const std::size_t j = info->arity == 2 ? indices[1] : 0;
    if (!info->symplectic) return {ElemGen(i, j, std::move(param)), start + 1};
    return {SpGen(info->kind, i, j, std::move(param)), start + 1};
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<LocatedToken> parse_generator_tokens(std::string_view text, const Ring& ring,
                                                 std::size_t line) {
  return TokenScanner(text, ring, line).run();
}

Word parse_word(std::string_view text, std::size_t n, const Ring& ring, std::size_t line) {
  Word w(n, ring);
  for (auto& tok : parse_generator_tokens(text, ring, line)) {
    auto* g = std::get_if<ElemGen>(&tok.gen);
    if (g == nullptr) throw ParseError("symplectic generator in a type-A word", line, tok.column);
    try {
      w.push_back(std::move(*g));
    } catch (const IndexError& e) {
      throw ParseError(e.what(), line, tok.column);
    }
  }
  return w;
}

SpWord parse_sp_word(std::string_view text, std::size_t n, const Ring& ring, std::size_t line) {
  SpWord w(n, ring);
  for (auto& tok : parse_generator_tokens(text, ring, line)) {
    auto* g = std::get_if<SpGen>(&tok.gen);
    if (g == nullptr) throw ParseError("type-A generator in a symplectic word", line, tok.column);
    try {
      w.push_back(std::move(*g));
    } catch (const IndexError& e) {
      throw ParseError(e.what(), line, tok.column);
    }
  }
  return w;
}

bool mentions_symplectic(std::string_view text) {
  return text.find("Sp") != std::string_view::npos;
}

std::string format_gen(const ElemGen& g) {
  return "E(" + std::to_string(g.row) + "," + std::to_string(g.col) + ";" + g.param.to_string() +
         ")";
}

std::string format_gen(const SpGen& g) {
  std::string name;
  switch (g.kind) {
    case SpKind::Linear: name = "SpL"; break;
    case SpKind::LongUpper: name = "SpU"; break;
    case SpKind::LongLower: name = "SpD"; break;
    case SpKind::MixedUpper: name = "SpM+"; break;
    case SpKind::MixedLower: name = "SpM-"; break;
  }
  std::string idx = std::to_string(g.i);
  if (!is_long(g.kind)) idx += "," + std::to_string(g.j);
  return name + "(" + idx + ";" + g.param.to_string() + ")";
}

namespace {
template <typename W>
std::string join_word(const W& w) {
  std::string out;
  for (const auto& g : w.gens()) {
    if (!out.empty()) out += ' ';
    out += format_gen(g);
  }
  return out;
}
}  // namespace

std::string format_word(const Word& w) { return join_word(w); }
std::string format_word(const SpWord& w) { return join_word(w); }

}  // namespace chevbg

#include "chevbg/poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "chevbg/errors.hpp"

namespace chevbg {

CoeffSpec CoeffSpec::modular(std::uint64_t m) {
  if (m < 2) throw Error("modulus must be at least 2, got " + std::to_string(m));
  CoeffSpec s;
  s.modulus_ = m;
  return s;
}

mpz_class CoeffSpec::reduce(mpz_class c) const {
  if (modulus_ == 0) return c;
  mpz_class m(static_cast<unsigned long>(modulus_));
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::string CoeffSpec::to_string() const {
  if (modulus_ == 0) return "Z";
  return "Z/" + std::to_string(modulus_);
}

CoeffSpec CoeffSpec::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text.size() > 2 && text.substr(0, 2) == "Z/") {
    std::uint64_t m = 0;
    auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return modular(m);
  }
  throw Error("bad coefficient ring '" + std::string(text) + "' (expected Z or Z/m)");
}

RingElem::RingElem(Ring ring) : ring_(ring) {}

RingElem RingElem::constant(const Ring& ring, const mpz_class& c) {
  return monomial(ring, Exponents(ring.vars, 0), c);
}

RingElem RingElem::variable(const Ring& ring, std::size_t index) {
  if (index >= ring.vars) {
    throw IndexError("variable x" + std::to_string(index + 1) + " outside x1..x" +
                     std::to_string(ring.vars));
  }
  Exponents e(ring.vars, 0);
  e[index] = 1;
  return monomial(ring, std::move(e), 1);
}

RingElem RingElem::monomial(const Ring& ring, Exponents exps, const mpz_class& c) {
  if (exps.size() != ring.vars) throw IncompatibleRing("monomial length does not match variable count");
  RingElem r(ring);
  r.add_term(exps, c);
  return r;
}

bool RingElem::is_constant() const noexcept {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

bool RingElem::is_one() const { return is_constant() && constant_term() == 1; }

mpz_class RingElem::constant_term() const { return coefficient(Exponents(ring_.vars, 0)); }

mpz_class RingElem::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::uint32_t RingElem::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void RingElem::add_term(const Exponents& exps, const mpz_class& c) {
  mpz_class v = ring_.coeff.reduce(c);
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, v);
  if (inserted) return;
  it->second = ring_.coeff.reduce(it->second + v);
  if (it->second == 0) terms_.erase(it);
}

void RingElem::check_compatible(const RingElem& other) const {
  if (!(ring_ == other.ring_)) {
    throw IncompatibleRing("ring mismatch: " + ring_.coeff.to_string() + "[" +
                           std::to_string(ring_.vars) + " vars] vs " +
                           other.ring_.coeff.to_string() + "[" +
                           std::to_string(other.ring_.vars) + " vars]");
  }
}

RingElem RingElem::operator-() const {
  RingElem r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_.coeff.reduce(-c));
  return r;
}

RingElem& RingElem::operator+=(const RingElem& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

RingElem operator*(const RingElem& lhs, const RingElem& rhs) {
  lhs.check_compatible(rhs);
  RingElem r(lhs.ring_);
  if (lhs.is_zero() || rhs.is_zero()) return r;
  Exponents e(lhs.ring_.vars);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t t = 0; t < e.size(); ++t) e[t] = ea[t] + eb[t];
      auto [it, inserted] = r.terms_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    it->second = r.ring_.coeff.reduce(it->second);
    it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
  }
  return r;
}

RingElem& RingElem::operator*=(const RingElem& rhs) { return *this = *this * rhs; }

RingElem RingElem::scaled(const mpz_class& c) const {
  RingElem r(ring_);
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

RingElem RingElem::pow(std::uint32_t e) const {
  RingElem result = one(ring_);
  RingElem base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

RingElem RingElem::coerced(const CoeffSpec& target) const {
  RingElem r(Ring{target, ring_.vars});
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

std::string RingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool is_const = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    mpz_class mag = abs(c);
    if (c < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    first = false;
    bool need_star = false;
    if (is_const || mag != 1) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t t = 0; t < e.size(); ++t) {
      if (e[t] == 0) continue;
      if (need_star) out << '*';
      out << 'x' << (t + 1);
      if (e[t] > 1) out << '^' << e[t];
      need_star = true;
    }
  }
  return out.str();
}

bool canonical_less(const RingElem& a, const RingElem& b) {
  const auto& ra = a.ring();
  const auto& rb = b.ring();
  if (ra.coeff.modulus() != rb.coeff.modulus()) return ra.coeff.modulus() < rb.coeff.modulus();
  if (ra.vars != rb.vars) return ra.vars < rb.vars;
  return std::lexicographical_compare(
      a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

RingElem substitute(const RingElem& p, const std::map<std::size_t, RingElem>& assignment) {
  const Ring& ring = p.ring();
  for (const auto& [idx, value] : assignment) {
    if (idx >= ring.vars) {
      throw IndexError("substitution for x" + std::to_string(idx + 1) + " outside x1..x" +
                       std::to_string(ring.vars));
    }
    if (!(value.ring() == ring)) throw IncompatibleRing("substituted value lives in another ring");
  }
  RingElem result = RingElem::zero(ring);
  for (const auto& [e, c] : p.terms()) {
    Exponents kept = e;
    RingElem factor = RingElem::one(ring);
    for (const auto& [idx, value] : assignment) {
      if (e[idx] == 0) continue;
      factor *= value.pow(e[idx]);
      kept[idx] = 0;
    }
    result += RingElem::monomial(ring, std::move(kept), c) * factor;
  }
  return result;
}

RingElem derivative(const RingElem& p, std::size_t var) {
  const Ring& ring = p.ring();
  if (var >= ring.vars) {
    throw IndexError("derivative in x" + std::to_string(var + 1) + " outside x1..x" +
                     std::to_string(ring.vars));
  }
  RingElem result = RingElem::zero(ring);
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    result += RingElem::monomial(ring, std::move(d), c * e[var]);
  }
  return result;
}

RingElem exact_quotient(const RingElem& p, const RingElem& q) {
  if (!(p.ring() == q.ring())) throw IncompatibleRing("exact_quotient: ring mismatch");
  if (!p.ring().coeff.is_integers()) throw Unsupported("exact_quotient is defined over Z only");
  if (q.is_zero()) throw Error("exact_quotient: division by zero");
  const Ring& ring = p.ring();
  const auto& [lead_e, lead_c] = *q.terms().rbegin();
  RingElem rem = p;
  RingElem quot = RingElem::zero(ring);
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().rbegin();
    Exponents shift(ring.vars);
    for (std::size_t t = 0; t < ring.vars; ++t) {
      if (e[t] < lead_e[t]) throw Error("exact_quotient: divisor does not divide dividend");
      shift[t] = e[t] - lead_e[t];
    }
    if (!mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) {
      throw Error("exact_quotient: divisor does not divide dividend");
    }
    RingElem t = RingElem::monomial(ring, std::move(shift), mpz_class(c / lead_c));
    rem -= t * q;
    quot += t;
  }
  return quot;
}

}  // namespace chevbg

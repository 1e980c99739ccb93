#include "chevbg/factorization.hpp"

#include "chevbg/errors.hpp"

namespace chevbg {

RingElem dot(std::span<const RingElem> a, std::span<const RingElem> b) {
  if (a.size() != b.size() || a.empty()) throw IncompatibleRing("dot: length mismatch");
  RingElem s = RingElem::zero(a[0].ring());
  for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
  return s;
}

RankOneData rank_one_data(const Word& gamma, std::size_t i, std::size_t j, const RingElem& a) {
  const std::size_t n = gamma.dim();
  if (n < 3) throw Unsupported("rank_one_data needs dimension >= 3");
  if (i < 1 || i > n || j < 1 || j > n) throw IndexError("rank_one_data: index out of range");
  if (i == j) throw IndexError("rank_one_data: i must differ from j");
  if (!(a.ring() == gamma.ring())) throw IncompatibleRing("parameter and gamma live in different rings");

  const SqMatrix g = word_eval(gamma);
  const SqMatrix g_inv = word_eval(word_inverse(gamma));
  RankOneData d;
  for (std::size_t t = 0; t < n; ++t) {
    d.v.push_back(g(t, i - 1));
    d.w.push_back(a * g_inv(j - 1, t));
    d.gamma_row.push_back(g_inv(i - 1, t));
  }
  return d;
}

bool rank_one_invariants_hold(const RankOneData& d) {
  return dot(d.gamma_row, d.v).is_one() && dot(d.w, d.v).is_zero();
}

MennickeCoeffs mennicke_coeffs(const RankOneData& d) {
  const std::size_t n = d.v.size();
  MennickeCoeffs b;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = l + 1; m < n; ++m)
      b.emplace(std::pair{l + 1, m + 1}, d.w[l] * d.gamma_row[m] - d.w[m] * d.gamma_row[l]);
  return b;
}

std::vector<RingElem> reconstruct_w(std::span<const RingElem> v, const MennickeCoeffs& b) {
  std::vector<RingElem> w(v.size(), RingElem::zero(v[0].ring()));
  for (const auto& [lm, coeff] : b) {
    const auto [l, m] = lm;
    w[l - 1] += coeff * v[m - 1];
    w[m - 1] -= coeff * v[l - 1];
  }
  return w;
}

namespace {

void check_factor(const MennickeFactor& f) {
  const std::size_t n = f.v.size();
  if (n < 3) throw Unsupported("Mennicke factors need dimension >= 3");
  if (f.l < 1 || f.m > n || f.l >= f.m) throw IndexError("Mennicke factor needs 1 <= l < m <= n");
  for (const auto& x : f.v)
    if (!(x.ring() == f.b.ring())) throw IncompatibleRing("Mennicke factor: ring mismatch");
}

}  // namespace

SqMatrix mennicke_factor_matrix(const MennickeFactor& f) {
  check_factor(f);
  const std::size_t n = f.v.size();
  const std::size_t l = f.l - 1;
  const std::size_t m = f.m - 1;
  SqMatrix out = SqMatrix::identity(n, f.b.ring());
  for (std::size_t r = 0; r < n; ++r) {
    const RingElem scaled = f.v[r] * f.b;
    out.add_to(r, l, scaled * f.v[m]);
    out.add_to(r, m, -(scaled * f.v[l]));
  }
  return out;
}

Word factor_mennicke(const MennickeFactor& f) {
  check_factor(f);
  const std::size_t n = f.v.size();
  const Ring& ring = f.b.ring();
  const std::size_t l = f.l;
  const std::size_t m = f.m;
  Word word(n, ring);
  if (f.b.is_zero()) return word;

  auto emit = [&](std::size_t r, std::size_t c, RingElem p) {
    if (!p.is_zero()) word.push_back(ElemGen(r, c, std::move(p)));
  };
  const RingElem& vl = f.v[l - 1];
  const RingElem& vm = f.v[m - 1];
  const RingElem& b = f.b;

  for (std::size_t p = 1; p <= n; ++p) {
    if (p == l || p == m) continue;
    const RingElem bvp = b * f.v[p - 1];
    emit(p, l, bvp * vm);
    emit(p, m, -(bvp * vl));
  }

  if (vm.is_zero()) {
    emit(l, m, -(b * vl * vl));
  } else if (vl.is_zero()) {
    emit(m, l, b * vm * vm);
  } else {
    std::size_t q = 1;
    while (q == l || q == m) ++q;
    const RingElem bvm = b * vm;
    const RingElem bvl = b * vl;
    emit(l, q, vl);
    emit(m, q, vm);
    emit(q, l, bvm);
    emit(q, m, -bvl);
    emit(m, q, -vm);
    emit(l, q, -vl);
    emit(q, m, bvl);
    emit(q, l, -bvm);
  }

  if (word.size() > mennicke_bound(n)) {
    throw ConstructionFailure("Mennicke factor word of length " + std::to_string(word.size()) +
                              " exceeds 2n+4 = " + std::to_string(mennicke_bound(n)));
  }
  if (!(word_eval(word) == mennicke_factor_matrix(f))) {
    throw ConstructionFailure("Mennicke factor word does not multiply out to the factor");
  }
  return word;
}

std::string to_string(Verified v) {
  switch (v) {
    case Verified::Yes: return "yes";
    case Verified::No: return "no";
    case Verified::Unchecked: return "unchecked";
  }
  return "unchecked";
}

Verified verified_from_string(const std::string& s) {
  if (s == "yes") return Verified::Yes;
  if (s == "no") return Verified::No;
  if (s == "unchecked") return Verified::Unchecked;
  throw Error("verified must be yes, no or unchecked, got '" + s + "'");
}

FactorizationWitness conj_decompose(const Word& gamma, std::size_t i, std::size_t j,
                                    const RingElem& a) {
  const RankOneData d = rank_one_data(gamma, i, j, a);
  const std::size_t n = gamma.dim();
  const MennickeCoeffs b = mennicke_coeffs(d);

  Word word(n, gamma.ring());
  std::vector<std::size_t> lengths;
  for (const auto& [lm, coeff] : b) {
    const Word part = factor_mennicke(MennickeFactor{d.v, coeff, lm.first, lm.second});
    lengths.push_back(part.size());
    word.append(part);
  }

  SqMatrix target = word_eval(gamma) * elem_matrix(ElemGen(i, j, a), n) *
                    word_eval(word_inverse(gamma));
  FactorizationWitness wit{std::move(target), std::move(word), conjugation_bound(n),
                           Verified::Unchecked, std::move(lengths)};
  wit.verified = verify_witness(wit);
  return wit;
}

Verified verify_witness(const FactorizationWitness& wit) {
  if (wit.word.size() > wit.claimed_bound) return Verified::No;
  if (wit.word.dim() != wit.target.dim() || !(wit.word.ring() == wit.target.ring())) {
    return Verified::No;
  }
  return word_eval(wit.word) == wit.target ? Verified::Yes : Verified::No;
}

}  // namespace chevbg

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chevbg/chevalley.hpp"
#include "chevbg/matrix.hpp"

namespace chevbg {

/// Per-factor word length bound: 8 letters for the core plus two per
/// coordinate outside {l, m}.
constexpr std::size_t mennicke_bound(std::size_t n) { return 2 * n + 4; }
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }
/// (2n+4) * n(n-1)/2 = (n+2) n (n-1).
constexpr std::size_t conjugation_bound(std::size_t n) { return mennicke_bound(n) * pair_count(n); }

RingElem dot(std::span<const RingElem> a, std::span<const RingElem> b);

/// For gamma * e_ij(a) * gamma^-1 = I + v w:
///   v          i-th column of gamma
///   w          a times the j-th row of gamma^-1
///   gamma_row  i-th row of gamma^-1
/// so that gamma_row . v = 1 and w . v = 0.
struct RankOneData {
  std::vector<RingElem> v;
  std::vector<RingElem> w;
  std::vector<RingElem> gamma_row;
};

RankOneData rank_one_data(const Word& gamma, std::size_t i, std::size_t j, const RingElem& a);

/// gamma_row . v == 1 and w . v == 0, exactly.
bool rank_one_invariants_hold(const RankOneData& d);

/// Keys are 1-based pairs (l, m) with l < m.
using MennickeCoeffs = std::map<std::pair<std::size_t, std::size_t>, RingElem>;

/// b_{l,m} = w_l gamma_m - w_m gamma_l for all l < m.
MennickeCoeffs mennicke_coeffs(const RankOneData& d);

/// sum_{l<m} b_{l,m} (v_m e_l - v_l e_m); equals w whenever the invariants hold.
std::vector<RingElem> reconstruct_w(std::span<const RingElem> v, const MennickeCoeffs& b);

/// The rank-one factor I + v b (v_m e_l - v_l e_m)^T; l, m are 1-based, l < m.
struct MennickeFactor {
  std::vector<RingElem> v;
  RingElem b;
  std::size_t l = 0;
  std::size_t m = 0;
};

SqMatrix mennicke_factor_matrix(const MennickeFactor& f);

/// Elementary word of length <= 2n+4 for the factor, certified by
/// re-multiplication before returning (ConstructionFailure otherwise).
///
/// With u = v_m e_l - v_l e_m, split v = v' + v'' where v' is supported on
/// {l, m}. Because u . v' = u . v'' = 0,
///   I + b v u^T = (I + b v'' u^T)(I + b v' u^T).
/// The first factor is the commuting product over p outside {l, m} of
/// e_{p,l}(b v_p v_m) e_{p,m}(-b v_p v_l): 2(n-2) letters. For the second,
/// with q the smallest index outside {l, m},
///   X = e_{l,q}(v_l) e_{m,q}(v_m) = I + v' e_q^T,
///   Y = e_{q,l}(b v_m) e_{q,m}(-b v_l) = I + e_q (b u)^T,
/// and X Y X^-1 Y^-1 = I + b v' u^T: 8 letters. If v_m = 0 the second factor
/// is the single letter e_{l,m}(-b v_l^2); if v_l = 0 it is e_{m,l}(b v_m^2).
/// Letters with zero parameter are not emitted.
Word factor_mennicke(const MennickeFactor& f);

enum class Verified { Yes, No, Unchecked };

std::string to_string(Verified v);
Verified verified_from_string(const std::string& s);

/// Certificate that `target` lies in X^claimed_bound.
struct FactorizationWitness {
  SqMatrix target;
  Word word;
  std::size_t claimed_bound = 0;
  Verified verified = Verified::Unchecked;
  /// Lengths of the per-pair subwords in lexicographic (l, m) order; empty for
  /// witnesses not produced by conj_decompose.
  std::vector<std::size_t> factor_lengths;
};

/// Factors gamma e_ij(a) gamma^-1 as the concatenation of factor_mennicke words
/// over pairs (l, m) in lexicographic order, with claimed bound (n+2) n (n-1).
FactorizationWitness conj_decompose(const Word& gamma, std::size_t i, std::size_t j,
                                    const RingElem& a);

/// Yes iff the word multiplies out to the target exactly and is no longer than
/// the claimed bound.
Verified verify_witness(const FactorizationWitness& wit);

}  // namespace chevbg

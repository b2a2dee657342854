#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "halfgcd/mat2.hpp"

namespace halfgcd {

/// Largest input degree the quadratic reference accepts.
inline constexpr std::int64_t kReferenceMaxDegree = std::int64_t{1} << 16;

/// R_0 = P, R_1 = Q, R_{k+1} = R_{k-1} rem R_k, with the quotients
/// q_k = R_{k-1} quo R_k so that B_k = [[0, 1], [1, -q_k]].
template <Field F>
struct RemainderSequence {
  std::int64_t d = 0;
  /// R_0 .. R_ell for a complete sequence (R_ell = 0).
  std::vector<Poly<F>> remainders;
  /// q_1 .. q_{ell-1}, stored from index 0.
  std::vector<Poly<F>> quotients;
  /// False when the computation stopped early on request; ell is then
  /// the number of remainders computed so far.
  bool complete = true;

  std::int64_t ell() const { return static_cast<std::int64_t>(remainders.size()) - 1; }
  const Poly<F>& remainder(std::int64_t i) const { return remainders.at(static_cast<std::size_t>(i)); }
  const Poly<F>& quotient(std::int64_t k) const { return quotients.at(static_cast<std::size_t>(k - 1)); }
  Mat2<F> bezout(const F& f, std::int64_t k) const { return Mat2<F>::elementary(f, quotient(k)); }
  /// The last nonzero remainder.
  const Poly<F>& gcd() const { return remainders.at(remainders.size() - 2); }
};

/// Remainder sequence of (P, Q) with deg P > deg Q. Stops once a remainder
/// of degree below `stop_below` has been produced; the default runs to the
/// end.
template <Field F>
RemainderSequence<F> remainder_sequence(const F& f, const Poly<F>& p, const Poly<F>& q, CostCounter& cc,
                                        std::int64_t stop_below = kZeroDegree, const MulBackend& be = {}) {
  if (p.degree() <= q.degree()) throw PreconditionViolated("remainder sequence needs deg P > deg Q");
  if (p.degree() > kReferenceMaxDegree) {
    throw PreconditionViolated("reference sequence refuses degree " + std::to_string(p.degree()));
  }
  RemainderSequence<F> s;
  s.d = p.degree();
  s.remainders = {p, q};
  while (!s.remainders.back().is_zero()) {
    if (s.remainders.back().degree() < stop_below) {
      s.complete = false;
      break;
    }
    const auto& a = s.remainders[s.remainders.size() - 2];
    const auto& b = s.remainders.back();
    auto [quo, rem] = quo_rem(f, a, b, be, cc);
    s.quotients.push_back(std::move(quo));
    s.remainders.push_back(std::move(rem));
  }
  return s;
}

template <Field F>
bool is_normal(const RemainderSequence<F>& s) {
  return s.complete && s.ell() == s.d + 1;
}

namespace detail {

// B_{hi-1} ... B_lo, for the given list of factor indices [lo, hi).
template <Field F>
Mat2<F> split_product(const F& f, const RemainderSequence<F>& s, const std::vector<std::int64_t>& idx, std::size_t lo,
                      std::size_t hi, const MulBackend& be, CostCounter& cc) {
  if (hi == lo) return Mat2<F>::identity(f);
  if (hi - lo == 1) return s.bezout(f, idx[lo]);
  std::size_t mid = lo + (hi - lo) / 2;
  Mat2<F> low = split_product(f, s, idx, lo, mid, be, cc);
  Mat2<F> high = split_product(f, s, idx, mid, hi, be, cc);
  return mat_mul(f, high, low, be, cc);
}

}  // namespace detail

/// B_{i;j} = B_{j-1} ... B_{i+1} B_i by binary splitting; Id when i == j.
template <Field F>
Mat2<F> bezout_product(const F& f, const RemainderSequence<F>& s, std::int64_t i, std::int64_t j, CostCounter& cc,
                       const MulBackend& be = {}) {
  if (i < 1 || i > j || j > s.ell()) {
    throw IndexOutOfRange("B_{" + std::to_string(i) + ";" + std::to_string(j) + "} outside 1 <= i <= j <= " +
                          std::to_string(s.ell()));
  }
  if (j - 1 > static_cast<std::int64_t>(s.quotients.size())) {
    throw IndexOutOfRange("sequence was truncated before B_" + std::to_string(j - 1));
  }
  std::vector<std::int64_t> idx;
  for (std::int64_t m = i; m < j; ++m) idx.push_back(m);
  return detail::split_product(f, s, idx, 0, idx.size(), be, cc);
}

/// The re-indexation kappa(i) = d - deg R_i for 1 <= i < ell, kappa(0) = 0,
/// kappa(ell) = d + 1, so that R*_k has degree at most d - k.
struct StarredSequence {
  std::int64_t d = 0;
  std::int64_t ell = 0;
  std::vector<std::int64_t> kappa;

  /// Index i with kappa(i) <= k < kappa(i + 1).
  std::int64_t block_of(std::int64_t k) const {
    std::int64_t i = 0;
    while (i + 1 < static_cast<std::int64_t>(kappa.size()) && kappa[static_cast<std::size_t>(i + 1)] <= k) ++i;
    return i;
  }
};

template <Field F>
StarredSequence reindex(const RemainderSequence<F>& s) {
  StarredSequence r;
  r.d = s.d;
  r.ell = s.ell();
  r.kappa.push_back(0);
  for (std::int64_t i = 1; i < s.ell(); ++i) r.kappa.push_back(s.d - s.remainder(i).degree());
  if (s.complete) {
    r.kappa.push_back(s.d + 1);
  } else if (s.ell() >= 1) {
    r.kappa.push_back(s.d - s.remainder(s.ell()).degree());
  }
  return r;
}

/// R*_k: R_i when k = kappa(i), R_{i+1} for kappa(i) < k < kappa(i+1).
template <Field F>
const Poly<F>& starred_remainder(const RemainderSequence<F>& s, const StarredSequence& st, std::int64_t k) {
  std::int64_t i = st.block_of(k);
  if (st.kappa[static_cast<std::size_t>(i)] == k) return s.remainder(i);
  return s.remainder(i + 1);
}

/// B*_k: B_i when k = kappa(i) with 1 <= i < ell, Id otherwise.
template <Field F>
Mat2<F> starred_factor(const F& f, const RemainderSequence<F>& s, const StarredSequence& st, std::int64_t k) {
  std::int64_t i = st.block_of(k);
  if (i >= 1 && i < s.ell() && st.kappa[static_cast<std::size_t>(i)] == k &&
      i - 1 < static_cast<std::int64_t>(s.quotients.size())) {
    return s.bezout(f, i);
  }
  return Mat2<F>::identity(f);
}

/// B*_{i;j} = B*_{j-1} ... B*_i, i.e. the product of the B_m with
/// i <= kappa(m) < j.
template <Field F>
Mat2<F> starred_product(const F& f, const RemainderSequence<F>& s, const StarredSequence& st, std::int64_t i,
                        std::int64_t j, CostCounter& cc, const MulBackend& be = {}) {
  if (i < 1 || i > j) throw IndexOutOfRange("starred product needs 1 <= i <= j");
  std::vector<std::int64_t> idx;
  for (std::int64_t m = 1; m < s.ell() && m - 1 < static_cast<std::int64_t>(s.quotients.size()); ++m) {
    std::int64_t km = st.kappa[static_cast<std::size_t>(m)];
    if (km >= i && km < j) idx.push_back(m);
  }
  if (!s.complete && j - 1 >= st.kappa.back()) {
    throw IndexOutOfRange("sequence was truncated before B*_" + std::to_string(j - 1));
  }
  return detail::split_product(f, s, idx, 0, idx.size(), be, cc);
}

/// Reference B*_{1;k+1}(P, Q): runs the remainder sequence only as far as
/// the starred product needs.
template <Field F>
Mat2<F> reference_half_gcd(const F& f, const Poly<F>& p, const Poly<F>& q, std::int64_t k, CostCounter& cc,
                           const MulBackend& be = {}) {
  std::int64_t d = p.degree();
  RemainderSequence<F> s = remainder_sequence(f, p, q, cc, d - k, be);
  StarredSequence st = reindex(s);
  return starred_product(f, s, st, 1, k + 1, cc, be);
}

}  // namespace halfgcd

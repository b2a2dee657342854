#pragma once

#include <cstdint>
#include <string>

#include "halfgcd/euclid.hpp"
#include "halfgcd/mat2.hpp"

namespace halfgcd {

struct HgcdOptions {
  /// Recursion stops at k <= threshold and finishes with plain Euclidean
  /// steps. 1 disables the leaf so every level is the divide-and-conquer one.
  std::int64_t threshold = 32;
  /// Update the remainders with a matrix middle product instead of full
  /// products (generic algorithms only; the transform-based ones always do).
  bool middle_product = true;
  /// Multiplication used by the generic algorithms.
  MulBackend backend{};
};

/// Coefficient of x^pos in the first entry of M (P, Q)^T, in O(deg M).
template <Field F>
typename F::Elem recover_top_term(const F& f, const Mat2<F>& m, const Poly<F>& p, const Poly<F>& q, std::int64_t pos,
                                  CostCounter& cc) {
  typename F::Elem acc = f.zero();
  std::int64_t dm = m.degree();
  for (std::int64_t i = 0; i <= dm; ++i) {
    acc = f.add(acc, f.add(f.mul(m(0, 0).coeff(i), p.coeff(pos - i)), f.mul(m(0, 1).coeff(i), q.coeff(pos - i))));
  }
  if (dm >= 0) {
    cc.mults(2 * static_cast<std::uint64_t>(dm + 1));
    cc.adds(2 * static_cast<std::uint64_t>(dm + 1));
  }
  return acc;
}

namespace detail {

// [[0, 1], [1, -q]] * M without general products.
template <Field F>
Mat2<F> left_elementary(const F& f, const Poly<F>& q, const Mat2<F>& m, const MulBackend& be, CostCounter& cc) {
  Mat2<F> r;
  r(0, 0) = m(1, 0);
  r(0, 1) = m(1, 1);
  r(1, 0) = sub(f, m(0, 0), mul(f, q, m(1, 0), be, cc), cc);
  r(1, 1) = sub(f, m(0, 1), mul(f, q, m(1, 1), be, cc), cc);
  return r;
}

// The k = 1 step: [[0, 1], [1, -(P_{d-2;} quo Q_{d-2;})]].
template <Field F>
Mat2<F> single_step(const F& f, const Poly<F>& p, const Poly<F>& q, const MulBackend& be, CostCounter& cc) {
  std::int64_t d = p.degree();
  auto [quo, rem] = quo_rem(f, slice(p, d - 2), slice(q, d - 2), be, cc);
  return Mat2<F>::elementary(f, quo);
}

// B_{1;k+1} by k plain division steps on the top 2k coefficients, insisting
// that each quotient has degree one.
template <Field F>
Mat2<F> naive_normal(const F& f, const Poly<F>& p, const Poly<F>& q, std::int64_t k, const MulBackend& be,
                     CostCounter& cc) {
  std::int64_t d = p.degree();
  Poly<F> r0 = slice(p, d - 2 * k), r1 = slice(q, d - 2 * k);
  Mat2<F> m = Mat2<F>::identity(f);
  for (std::int64_t i = 0; i < k; ++i) {
    if (r1.is_zero() || r0.degree() - r1.degree() != 1) {
      throw AbnormalSequence("quotient " + std::to_string(i + 1) + " does not have degree 1");
    }
    auto [quo, rem] = quo_rem(f, r0, r1, be, cc);
    m = left_elementary(f, quo, m, be, cc);
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
  return m;
}

// B*_{1;k+1} by plain division steps on the top 2k coefficients.
template <Field F>
Mat2<F> naive_general(const F& f, const Poly<F>& p, const Poly<F>& q, std::int64_t k, const MulBackend& be,
                      CostCounter& cc) {
  std::int64_t d = p.degree();
  Poly<F> r0 = slice(p, d - 2 * k), r1 = slice(q, d - 2 * k);
  Mat2<F> m = Mat2<F>::identity(f);
  while (!r1.is_zero() && r1.degree() >= k) {
    auto [quo, rem] = quo_rem(f, r0, r1, be, cc);
    m = left_elementary(f, quo, m, be, cc);
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
  return m;
}

// (M (P, Q)^T)_{a;} restricted to what the recursion needs: both entries
// from coefficient a on, the first one up to its top coefficient `top`.
// m = deg M, c = number of coefficients produced per block.
template <Field F>
std::pair<Poly<F>, Poly<F>> update_remainders(const F& f, const Mat2<F>& m, const Poly<F>& p, const Poly<F>& q,
                                              std::int64_t a, std::int64_t c, std::int64_t top,
                                              const HgcdOptions& opt, CostCounter& cc) {
  std::int64_t dm = m.degree();
  if (!opt.middle_product) {
    auto [pt, qt] = apply(f, m, slice(p, a - dm), slice(q, a - dm), opt.backend, cc);
    return {slice(pt, dm, dm + top - a + 1), slice(qt, dm, dm + 2 * c)};
  }
  Mat2<F> rhs;
  for (int j = 0; j < 2; ++j) {
    rhs(0, j) = slice(p, a + j * c - dm, a + (j + 1) * c);
    rhs(1, j) = slice(q, a + j * c - dm, a + (j + 1) * c);
  }
  Mat2<F> t = mat_middle_product(f, m, dm, rhs, c + dm, opt.backend, cc);
  typename F::Elem lead = recover_top_term(f, m, p, q, top, cc);
  std::vector<typename F::Elem> pc(static_cast<std::size_t>(top - a + 1)), qc(static_cast<std::size_t>(2 * c));
  for (std::int64_t i = 0; i < c; ++i) {
    pc[static_cast<std::size_t>(i)] = t(0, 0).coeff(i);
    pc[static_cast<std::size_t>(c + i)] = t(0, 1).coeff(i);
    qc[static_cast<std::size_t>(i)] = t(1, 0).coeff(i);
    qc[static_cast<std::size_t>(c + i)] = t(1, 1).coeff(i);
  }
  pc.back() = lead;
  return {Poly<F>(std::move(pc)), Poly<F>(std::move(qc))};
}

template <Field F>
Mat2<F> normal_basic_rec(const F& f, const Poly<F>& p, const Poly<F>& q, std::int64_t k, const HgcdOptions& opt,
                         CostCounter& cc) {
  if (k == 1) {
    std::int64_t d = p.degree();
    if (q.degree() != d - 1) throw AbnormalSequence("quotient 1 does not have degree 1");
    return single_step(f, p, q, opt.backend, cc);
  }
  if (k <= opt.threshold) return naive_normal(f, p, q, k, opt.backend, cc);
  std::int64_t d = p.degree();
  std::int64_t h = (k + 1) / 2, ht = k - h;
  Mat2<F> m = normal_basic_rec(f, slice(p, d - 2 * h), slice(q, d - 2 * h), h, opt, cc);
  if (m.degree() != h) throw AbnormalSequence("Bezout product of unexpected degree");
  std::int64_t a = d - h - 2 * ht;
  auto [pt, qt] = update_remainders(f, m, p, q, a, ht, d - h, opt, cc);
  if (qt.degree() != pt.degree() - 1) throw AbnormalSequence("remainder of unexpected degree");
  Mat2<F> mt = normal_basic_rec(f, pt, qt, ht, opt, cc);
  return mat_mul(f, mt, m, opt.backend, cc);
}

template <Field F>
Mat2<F> general_rec(const F& f, const Poly<F>& p, const Poly<F>& q, std::int64_t k, const HgcdOptions& opt,
                    CostCounter& cc) {
  std::int64_t d = p.degree();
  if (q.degree() < d - k) return Mat2<F>::identity(f);
  if (k == 1) return single_step(f, p, q, opt.backend, cc);
  if (k <= opt.threshold) return naive_general(f, p, q, k, opt.backend, cc);
  std::int64_t h = (k + 1) / 2, ht = k - h;
  Mat2<F> m = general_rec(f, slice(p, d - 2 * h), slice(q, d - 2 * h), h, opt, cc);
  std::int64_t delta = h - m.degree();
  std::int64_t a = d - h - 2 * ht - delta;
  auto [pt, qt] = update_remainders(f, m, p, q, a, ht + delta, d - h + delta, opt, cc);
  if (qt.degree() < d - k - a) return m;
  std::int64_t hp = ht;
  if (delta > 0) {
    Poly<F> dq = quotient(f, pt, qt, opt.backend, cc);
    std::int64_t e = dq.degree();
    m = left_elementary(f, dq, m, opt.backend, cc);
    hp = k - m.degree();
    std::int64_t t = d - k - hp - a;
    Poly<F> pn = slice(qt, t);
    Poly<F> corr = middle_product_unchecked(f, dq, e, slice(qt, t - e, t + 2 * hp), 2 * hp + e, opt.backend, cc);
    Poly<F> qn = sub(f, slice(pt, t, t + 2 * hp), corr, cc);
    pt = std::move(pn);
    qt = std::move(qn);
  }
  Mat2<F> mt = general_rec(f, pt, qt, hp, opt, cc);
  return mat_mul(f, mt, m, opt.backend, cc);
}

}  // namespace detail

/// B_{1;k+1}(P, Q) for a pair whose first k quotients all have degree one,
/// by the generic divide-and-conquer recursion with split h = ceil(k/2).
/// Inputs with d = deg P < 2k are handled as if multiplied by x^(2k-d).
/// Throws AbnormalSequence when a quotient of another degree shows up.
template <Field F>
Mat2<F> hgcd_normal_basic(const F& f, const Poly<F>& p, const Poly<F>& q, std::int64_t k, const HgcdOptions& opt,
                          CostCounter& cc) {
  std::int64_t d = p.degree();
  if (p.is_zero() || k < 0 || k > d) throw PreconditionViolated("half-gcd needs 0 <= k <= deg P");
  if (q.degree() >= d) throw PreconditionViolated("half-gcd needs deg Q < deg P");
  if (k == 0) return Mat2<F>::identity(f);
  return detail::normal_basic_rec(f, slice(p, d - 2 * k), slice(q, d - 2 * k), k, opt, cc);
}

/// B*_{1;k+1}(P, Q) for arbitrary (P, Q) with deg Q < deg P, k <= deg P.
template <Field F>
Mat2<F> hgcd_general(const F& f, const Poly<F>& p, const Poly<F>& q, std::int64_t k, const HgcdOptions& opt,
                     CostCounter& cc) {
  std::int64_t d = p.degree();
  if (p.is_zero() || k < 0 || k > d) throw PreconditionViolated("half-gcd needs 0 <= k <= deg P");
  if (q.degree() >= d) throw PreconditionViolated("half-gcd needs deg Q < deg P");
  return detail::general_rec(f, slice(p, d - 2 * k), slice(q, d - 2 * k), k, opt, cc);
}

/// Half-gcd matrix together with its spectrum at the transform length used.
struct HalfGcdResult {
  PrimeMat2 matrix;
  Mat2Spectrum spectrum;
};

/// B_{1;k+1}(P, Q) and its length-k spectrum for k a power of two, using
/// transforms of length k at every level with doubling of cached child
/// spectra. Throws AbnormalSequence on a quotient of degree other than one.
HalfGcdResult hgcd_normal_fft(const TransformPlan& plan, const PrimePoly& p, const PrimePoly& q, std::int64_t k,
                              const HgcdOptions& opt, CostCounter& cc);

/// B_{1;k+1}(P, Q) for any k, splitting k into decreasing powers of two.
PrimeMat2 hgcd_normal_any(const TransformPlan& plan, const PrimePoly& p, const PrimePoly& q, std::int64_t k,
                          const HgcdOptions& opt, CostCounter& cc);

/// B*_{1;k+1}(P, Q) and its length-ell spectrum. ell = 0 selects the
/// smallest power of two >= k.
HalfGcdResult hgcd_general_fft(const TransformPlan& plan, const PrimePoly& p, const PrimePoly& q, std::int64_t k,
                               const HgcdOptions& opt, CostCounter& cc, std::uint64_t ell = 0);

}  // namespace halfgcd

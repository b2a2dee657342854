#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "halfgcd/cost.hpp"
#include "halfgcd/errors.hpp"
#include "halfgcd/ntt.hpp"
#include "halfgcd/poly.hpp"

namespace halfgcd {

struct MulBackend {
  enum class Kind { schoolbook, karatsuba, ntt };
  Kind kind = Kind::karatsuba;
  /// Karatsuba falls back to schoolbook for operands of at most this length.
  std::size_t karatsuba_threshold = 32;
  /// The NTT path is only taken when both operands are longer than this;
  /// shorter products go through Karatsuba.
  std::size_t ntt_threshold = 16;
  /// Required for Kind::ntt.
  const TransformPlan* plan = nullptr;
  /// On lengths the plan cannot handle, use Karatsuba instead of throwing.
  bool fallback = true;

  static MulBackend schoolbook() { return {Kind::schoolbook}; }
  static MulBackend karatsuba(std::size_t threshold = 32) { return {Kind::karatsuba, threshold}; }
  static MulBackend ntt(const TransformPlan& plan, std::size_t threshold = 16) {
    return {Kind::ntt, 32, threshold, &plan, true};
  }
};

/// Quotient degree at which quo_rem switches from long division to Newton.
inline constexpr std::int64_t kNewtonDivisionThreshold = 32;

namespace detail {

template <Field F>
void schoolbook_into(const F& f, const typename F::Elem* a, std::size_t n, const typename F::Elem* b,
                     std::size_t m, typename F::Elem* out, CostCounter& cc) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == typename F::Elem{}) continue;
    for (std::size_t j = 0; j < m; ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  cc.mults(n * m);
  cc.adds(n * m);
}

// out (2n - 1 entries, zero on entry) += a * b for equal lengths n.
template <Field F>
void karatsuba_square(const F& f, const typename F::Elem* a, const typename F::Elem* b, std::size_t n,
                      typename F::Elem* out, std::size_t threshold, CostCounter& cc) {
  using Elem = typename F::Elem;
  if (n <= threshold || n < 2) {
    schoolbook_into(f, a, n, b, n, out, cc);
    return;
  }
  std::size_t m = n / 2, hi = n - m;
  std::vector<Elem> z0(2 * m - 1), z2(2 * hi - 1), z1(2 * hi - 1);
  karatsuba_square(f, a, b, m, z0.data(), threshold, cc);
  karatsuba_square(f, a + m, b + m, hi, z2.data(), threshold, cc);
  std::vector<Elem> sa(a + m, a + n), sb(b + m, b + n);
  for (std::size_t i = 0; i < m; ++i) {
    sa[i] = f.add(sa[i], a[i]);
    sb[i] = f.add(sb[i], b[i]);
  }
  karatsuba_square(f, sa.data(), sb.data(), hi, z1.data(), threshold, cc);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = f.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = f.sub(z1[i], z2[i]);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = f.add(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + m] = f.add(out[i + m], z1[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * m] = f.add(out[i + 2 * m], z2[i]);
  cc.adds(2 * m + 2 * z0.size() + 2 * z2.size() + z1.size() + z2.size());
}

template <Field F>
Poly<F> schoolbook_mul(const F& f, const Poly<F>& p, const Poly<F>& q, CostCounter& cc) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<typename F::Elem> out(p.size() + q.size() - 1);
  schoolbook_into(f, p.coeffs().data(), p.size(), q.coeffs().data(), q.size(), out.data(), cc);
  return Poly<F>(std::move(out));
}

template <Field F>
Poly<F> karatsuba_mul(const F& f, const Poly<F>& p, const Poly<F>& q, std::size_t threshold, CostCounter& cc) {
  using Elem = typename F::Elem;
  if (p.is_zero() || q.is_zero()) return {};
  const Poly<F>& lo = p.size() <= q.size() ? p : q;
  const Poly<F>& hi = p.size() <= q.size() ? q : p;
  std::size_t m = lo.size();
  std::vector<Elem> out(p.size() + q.size() - 1);
  if (m <= threshold) {
    schoolbook_into(f, hi.coeffs().data(), hi.size(), lo.coeffs().data(), m, out.data(), cc);
    return Poly<F>(std::move(out));
  }
  // Cut the longer operand into blocks as long as the shorter one.
  std::vector<Elem> block(m), part(2 * m - 1);
  for (std::size_t start = 0; start < hi.size(); start += m) {
    std::size_t len = std::min(m, hi.size() - start);
    std::fill(block.begin(), block.end(), Elem{});
    std::copy(hi.coeffs().begin() + static_cast<std::ptrdiff_t>(start),
              hi.coeffs().begin() + static_cast<std::ptrdiff_t>(start + len), block.begin());
    std::fill(part.begin(), part.end(), Elem{});
    karatsuba_square(f, block.data(), lo.coeffs().data(), m, part.data(), threshold, cc);
    for (std::size_t i = 0; i < part.size() && start + i < out.size(); ++i) {
      out[start + i] = f.add(out[start + i], part[i]);
    }
    cc.adds(part.size());
  }
  return Poly<F>(std::move(out));
}

inline std::uint64_t next_pow2(std::uint64_t n) { return n <= 1 ? 1 : std::bit_ceil(n); }

inline PrimePoly ntt_mul(const TransformPlan& plan, const PrimePoly& p, const PrimePoly& q, CostCounter& cc) {
  if (p.is_zero() || q.is_zero()) return {};
  std::uint64_t n = next_pow2(p.size() + q.size() - 1);
  SpectrumVec a = dft(plan, p, n, cc);
  SpectrumVec b = dft(plan, q, n, cc);
  const PrimeField& f = plan.field();
  for (std::size_t i = 0; i < n; ++i) a[i] = f.mul(a[i], b[i]);
  cc.mults(n);
  return inverse_dft(plan, a, cc);
}

template <Field F>
bool use_ntt(const MulBackend& be, std::size_t out_len, std::size_t min_len) {
  if constexpr (!std::is_same_v<F, PrimeField>) {
    return false;
  } else {
    if (be.kind != MulBackend::Kind::ntt) return false;
    if (be.plan == nullptr) throw PreconditionViolated("NTT backend without a transform plan");
    if (min_len <= be.ntt_threshold) return false;
    if (!be.plan->supports(next_pow2(out_len))) {
      if (be.fallback) return false;
      throw UnsupportedLength("product length " + std::to_string(out_len) + " exceeds the field's transforms");
    }
    return true;
  }
}

}  // namespace detail

template <Field F>
Poly<F> mul(const F& f, const Poly<F>& p, const Poly<F>& q, const MulBackend& be, CostCounter& cc) {
  if (p.is_zero() || q.is_zero()) return {};
  switch (be.kind) {
    case MulBackend::Kind::schoolbook:
      return detail::schoolbook_mul(f, p, q, cc);
    case MulBackend::Kind::ntt:
      if constexpr (std::is_same_v<F, PrimeField>) {
        if (detail::use_ntt<F>(be, p.size() + q.size() - 1, std::min(p.size(), q.size()))) {
          return detail::ntt_mul(*be.plan, p, q, cc);
        }
      }
      [[fallthrough]];
    case MulBackend::Kind::karatsuba:
      break;
  }
  return detail::karatsuba_mul(f, p, q, be.karatsuba_threshold, cc);
}

template <Field F>
Poly<F> mul(const F& f, const Poly<F>& p, const Poly<F>& q, CostCounter& cc) {
  return mul(f, p, q, MulBackend{}, cc);
}

/// (P R)_{d; n} for deg P <= d and deg R < n, without checking that
/// deg P is exactly d. Entries of matrix middle products use this form.
template <Field F>
Poly<F> middle_product_unchecked(const F& f, const Poly<F>& p, std::int64_t d, const Poly<F>& r, std::int64_t n,
                                 const MulBackend& be, CostCounter& cc) {
  using Elem = typename F::Elem;
  if (p.is_zero() || r.is_zero() || n <= d) return {};
  std::size_t out_len = static_cast<std::size_t>(n - d);
  if (be.kind == MulBackend::Kind::schoolbook) {
    std::vector<Elem> out(out_len);
    std::uint64_t ops = 0;
    for (std::size_t i = 0; i < out_len; ++i) {
      Elem acc{};
      for (std::size_t k = 0; k < p.size(); ++k) {
        std::int64_t idx = d + static_cast<std::int64_t>(i) - static_cast<std::int64_t>(k);
        if (idx < 0 || idx >= static_cast<std::int64_t>(r.size())) continue;
        acc = f.add(acc, f.mul(p[k], r[static_cast<std::size_t>(idx)]));
        ++ops;
      }
      out[i] = acc;
    }
    cc.mults(ops);
    cc.adds(ops);
    return Poly<F>(std::move(out));
  }
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (detail::use_ntt<F>(be, static_cast<std::size_t>(n), std::min(p.size(), r.size()))) {
      const TransformPlan& plan = *be.plan;
      std::uint64_t len = detail::next_pow2(static_cast<std::uint64_t>(n));
      SpectrumVec a = dft(plan, p, len, cc);
      SpectrumVec b = dft(plan, r, len, cc);
      for (std::size_t i = 0; i < len; ++i) a[i] = f.mul(a[i], b[i]);
      cc.mults(len);
      return slice(inverse_dft(plan, a, cc), d, n);
    }
  }
  return slice(detail::karatsuba_mul(f, p, r, be.karatsuba_threshold, cc), d, n);
}

/// Middle product P |x|_d R: coefficient i is sum_{k=0}^{d} P_k R_{d+i-k}
/// for 0 <= i < n - d. Requires deg P == d and deg R < n.
template <Field F>
Poly<F> middle_product(const F& f, const Poly<F>& p, std::int64_t d, const Poly<F>& r, std::int64_t n,
                       const MulBackend& be, CostCounter& cc) {
  if (p.degree() != d) {
    throw DegreeMismatch("middle product expects deg P = " + std::to_string(d));
  }
  if (r.degree() >= n) throw LengthOverflow("middle product operand of degree >= n");
  return middle_product_unchecked(f, p, d, r, n, be, cc);
}

/// Inverse of Q modulo x^m by Newton iteration.
template <Field F>
Poly<F> series_inv(const F& f, const Poly<F>& q, std::int64_t m, const MulBackend& be, CostCounter& cc) {
  if (q.is_zero() || q[0] == typename F::Elem{}) throw NotInvertible("series inverse needs Q(0) != 0");
  if (m < 1) throw PreconditionViolated("series inverse precision must be positive");
  cc.divs(1);
  Poly<F> g = Poly<F>::constant(f.inv(q[0]));
  std::int64_t prec = 1;
  while (prec < m) {
    std::int64_t next = std::min<std::int64_t>(2 * prec, m);
    // g <- g + g (1 - Q g) mod x^next; the error term vanishes below x^prec.
    Poly<F> e = truncate(mul(f, truncate(q, static_cast<std::size_t>(next)), g, be, cc), static_cast<std::size_t>(next));
    Poly<F> err = slice(e, prec, next);
    Poly<F> corr = truncate(mul(f, g, err, be, cc), static_cast<std::size_t>(next - prec));
    g = sub(f, g, shift(corr, static_cast<std::size_t>(prec)), cc);
    prec = next;
  }
  return g;
}

template <Field F>
Poly<F> series_inv(const F& f, const Poly<F>& q, std::int64_t m, CostCounter& cc) {
  return series_inv(f, q, m, MulBackend{}, cc);
}

/// (P quo Q, P rem Q). Long division for short quotients, Newton
/// inversion of the reversed divisor for long ones.
template <Field F>
std::pair<Poly<F>, Poly<F>> quo_rem(const F& f, const Poly<F>& p, const Poly<F>& q, const MulBackend& be,
                                    CostCounter& cc) {
  using Elem = typename F::Elem;
  if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (p.degree() < q.degree()) return {Poly<F>{}, p};
  std::size_t dq = static_cast<std::size_t>(q.degree());
  std::size_t m = static_cast<std::size_t>(p.degree() - q.degree());
  if (static_cast<std::int64_t>(m) < kNewtonDivisionThreshold || dq == 0) {
    std::vector<Elem> r(p.coeffs());
    std::vector<Elem> quo(m + 1);
    cc.divs(1);
    Elem li = f.inv(q.lead());
    for (std::size_t i = m + 1; i-- > 0;) {
      Elem c = f.mul(r[i + dq], li);
      quo[i] = c;
      if (c == Elem{}) continue;
      for (std::size_t j = 0; j <= dq; ++j) r[i + j] = f.sub(r[i + j], f.mul(c, q[j]));
      cc.mults(dq + 1);
      cc.adds(dq + 1);
    }
    cc.mults(m + 1);
    r.resize(dq);
    return {Poly<F>(std::move(quo)), Poly<F>(std::move(r))};
  }
  Poly<F> rq = truncate(reverse(q, dq + 1), m + 1);
  Poly<F> inv = series_inv(f, rq, static_cast<std::int64_t>(m + 1), be, cc);
  Poly<F> rp = truncate(reverse(p, p.size()), m + 1);
  Poly<F> quo = reverse(truncate(mul(f, rp, inv, be, cc), m + 1), m + 1);
  Poly<F> rem = truncate(sub(f, p, mul(f, quo, q, be, cc), cc), dq);
  return {std::move(quo), std::move(rem)};
}

/// P quo Q alone. Only the top 2m + 1 coefficients of P and m + 1 of Q
/// matter, m = deg P - deg Q, so the operands are cut down first.
template <Field F>
Poly<F> quotient(const F& f, const Poly<F>& p, const Poly<F>& q, const MulBackend& be, CostCounter& cc) {
  if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::int64_t m = p.degree() - q.degree();
  if (m < 0) return {};
  std::int64_t s = std::max<std::int64_t>(0, q.degree() - m);
  return quo_rem(f, slice(p, s), slice(q, s), be, cc).first;
}

template <Field F>
std::pair<Poly<F>, Poly<F>> quo_rem(const F& f, const Poly<F>& p, const Poly<F>& q, CostCounter& cc) {
  return quo_rem(f, p, q, MulBackend{}, cc);
}

}  // namespace halfgcd

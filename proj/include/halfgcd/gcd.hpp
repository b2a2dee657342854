#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <type_traits>

#include "halfgcd/hgcd.hpp"

namespace halfgcd {

enum class Algorithm { automatic, euclid_ref, normal_basic, normal_fft, normal_any, general, general_fft };

/// Parses the names used on the command line ("auto", "euclid-ref",
/// "normal-basic", ...). Throws ParseError on anything else.
Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm a);

struct GcdConfig {
  Algorithm algorithm = Algorithm::automatic;
  HgcdOptions options{};
  /// Transform plan for prime fields; one is built on demand when absent.
  const TransformPlan* plan = nullptr;
};

template <Field F>
struct XgcdResult {
  Poly<F> g;
  Poly<F> u;
  Poly<F> v;
  /// Matrix whose first row is a multiple of (u, v) and whose second row
  /// annihilates (P, Q).
  Mat2<F> matrix;
};

namespace detail {

template <Field F>
constexpr bool kIsPrime = std::is_same_v<F, PrimeField>;

inline bool plan_fits(const TransformPlan& plan, std::int64_t k) {
  return plan.supports(next_pow2(static_cast<std::uint64_t>(std::max<std::int64_t>(k, 1))));
}

template <Field F>
Mat2<F> run_half_gcd(const F& f, const Poly<F>& p, const Poly<F>& q, std::int64_t k, Algorithm alg,
                     const HgcdOptions& opt, const TransformPlan* plan, CostCounter& cc) {
  switch (alg) {
    case Algorithm::euclid_ref:
      return reference_half_gcd(f, p, q, k, cc, opt.backend);
    case Algorithm::normal_basic:
      try {
        return hgcd_normal_basic(f, p, q, k, opt, cc);
      } catch (const AbnormalSequence&) {
        return hgcd_general(f, p, q, k, opt, cc);
      }
    case Algorithm::general:
      return hgcd_general(f, p, q, k, opt, cc);
    default:
      break;
  }
  if constexpr (kIsPrime<F>) {
    switch (alg) {
      case Algorithm::normal_fft:
      case Algorithm::normal_any:
        try {
          if (alg == Algorithm::normal_fft && k >= 1 && std::has_single_bit(static_cast<std::uint64_t>(k))) {
            return hgcd_normal_fft(*plan, p, q, k, opt, cc).matrix;
          }
          return hgcd_normal_any(*plan, p, q, k, opt, cc);
        } catch (const AbnormalSequence&) {
          return hgcd_general_fft(*plan, p, q, k, opt, cc).matrix;
        }
      case Algorithm::general_fft:
        return hgcd_general_fft(*plan, p, q, k, opt, cc).matrix;
      default:
        break;
    }
  }
  throw UnsupportedField("algorithm " + algorithm_name(alg) + " needs a prime field with roots of unity");
}

}  // namespace detail

/// B*_{1;k+1}(P, Q) by the configured algorithm. The normal-case algorithms
/// fall back to the general ones on abnormal input.
template <Field F>
Mat2<F> half_gcd(const F& f, const Poly<F>& p, const Poly<F>& q, std::int64_t k, const GcdConfig& cfg,
                 CostCounter& cc) {
  Algorithm alg = cfg.algorithm;
  if constexpr (detail::kIsPrime<F>) {
    std::unique_ptr<TransformPlan> own;
    const TransformPlan* plan = cfg.plan;
    if (plan == nullptr && alg != Algorithm::euclid_ref && alg != Algorithm::general && alg != Algorithm::normal_basic) {
      own = std::make_unique<TransformPlan>(f);
      plan = own.get();
    }
    if (alg == Algorithm::automatic) {
      alg = plan != nullptr && detail::plan_fits(*plan, k) ? Algorithm::general_fft : Algorithm::general;
    }
    HgcdOptions opt = cfg.options;
    if (opt.backend.kind == MulBackend::Kind::ntt && opt.backend.plan == nullptr) {
      if (plan == nullptr) {
        own = std::make_unique<TransformPlan>(f);
        plan = own.get();
      }
      opt.backend.plan = plan;
    }
    return detail::run_half_gcd(f, p, q, k, alg, opt, plan, cc);
  } else {
    if (alg == Algorithm::automatic) alg = Algorithm::general;
    return detail::run_half_gcd(f, p, q, k, alg, cfg.options, nullptr, cc);
  }
}

/// Extended gcd: monic g with u P + v Q = g.
template <Field F>
XgcdResult<F> xgcd(const F& f, const Poly<F>& p, const Poly<F>& q, const GcdConfig& cfg, CostCounter& cc) {
  if (p.is_zero() && q.is_zero()) throw Undefined("gcd(0, 0) is undefined");
  Poly<F> one = Poly<F>::constant(f.one());
  if (q.is_zero() || p.is_zero()) {
    bool first = q.is_zero();
    const Poly<F>& a = first ? p : q;
    cc.divs(1);
    typename F::Elem li = f.inv(a.lead());
    Poly<F> g = scale(f, a, li, cc);
    Poly<F> c = Poly<F>::constant(li);
    Mat2<F> mat = first ? Mat2<F>{{c, Poly<F>{}, Poly<F>{}, one}} : Mat2<F>{{Poly<F>{}, c, one, Poly<F>{}}};
    return {g, first ? c : Poly<F>{}, first ? Poly<F>{} : c, mat};
  }
  // Reduce to deg Q < deg P, remembering the transformation applied.
  Mat2<F> pre = Mat2<F>::identity(f);
  Poly<F> a = p, b = q;
  if (b.degree() > a.degree()) {
    std::swap(a, b);
    pre = {{Poly<F>{}, one, one, Poly<F>{}}};
  }
  if (b.degree() == a.degree()) {
    cc.divs(1);
    typename F::Elem c = f.div(a.lead(), b.lead());
    Poly<F> r = sub(f, a, scale(f, b, c, cc), cc);
    Mat2<F> j = Mat2<F>::elementary(f, Poly<F>::constant(c));
    pre = mat_mul(f, j, pre, cfg.options.backend, cc);
    a = std::move(b);
    b = std::move(r);
  }
  Mat2<F> m = pre;
  if (!b.is_zero()) {
    Mat2<F> h = half_gcd(f, a, b, a.degree(), cfg, cc);
    MulBackend be = cfg.options.backend;
    std::unique_ptr<TransformPlan> own;
    if constexpr (detail::kIsPrime<F>) {
      if (be.kind == MulBackend::Kind::ntt && be.plan == nullptr) {
        if (cfg.plan != nullptr) {
          be.plan = cfg.plan;
        } else {
          own = std::make_unique<TransformPlan>(f);
          be.plan = own.get();
        }
      }
    }
    m = mat_mul(f, h, pre, be, cc);
    auto [g0, zero] = apply(f, h, a, b, be, cc);
    cc.divs(1);
    typename F::Elem li = f.inv(g0.lead());
    return {scale(f, g0, li, cc), scale(f, m(0, 0), li, cc), scale(f, m(0, 1), li, cc), std::move(m)};
  }
  cc.divs(1);
  typename F::Elem li = f.inv(a.lead());
  return {scale(f, a, li, cc), scale(f, m(0, 0), li, cc), scale(f, m(0, 1), li, cc), std::move(m)};
}

/// Monic gcd of P and Q. Throws Undefined for gcd(0, 0).
template <Field F>
Poly<F> gcd(const F& f, const Poly<F>& p, const Poly<F>& q, const GcdConfig& cfg, CostCounter& cc) {
  if (p.is_zero() && q.is_zero()) throw Undefined("gcd(0, 0) is undefined");
  if (q.is_zero()) return monic(f, p, cc);
  if (p.is_zero()) return monic(f, q, cc);
  Poly<F> a = p, b = q;
  if (b.degree() > a.degree()) std::swap(a, b);
  if (b.degree() == a.degree()) {
    cc.divs(1);
    Poly<F> r = sub(f, a, scale(f, b, f.div(a.lead(), b.lead()), cc), cc);
    a = std::move(b);
    b = std::move(r);
  }
  if (b.is_zero()) return monic(f, a, cc);
  Mat2<F> h = half_gcd(f, a, b, a.degree(), cfg, cc);
  Poly<F> g = add(f, mul(f, h(0, 0), a, cfg.options.backend, cc), mul(f, h(0, 1), b, cfg.options.backend, cc), cc);
  return monic(f, g, cc);
}

template <Field F>
Poly<F> gcd(const F& f, const Poly<F>& p, const Poly<F>& q) {
  CostCounter cc;
  return gcd(f, p, q, GcdConfig{}, cc);
}

template <Field F>
XgcdResult<F> xgcd(const F& f, const Poly<F>& p, const Poly<F>& q) {
  CostCounter cc;
  return xgcd(f, p, q, GcdConfig{}, cc);
}

}  // namespace halfgcd

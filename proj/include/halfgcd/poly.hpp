#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "halfgcd/cost.hpp"
#include "halfgcd/field.hpp"

namespace halfgcd {

/// Degree reported for the zero polynomial.
inline constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

/// Dense univariate polynomial, coefficients low to high, never carrying
/// trailing zeros. The zero polynomial is the empty sequence.
template <Field F>
class Poly {
 public:
  using Elem = typename F::Elem;

  Poly() = default;
  explicit Poly(std::vector<Elem> c) : c_(std::move(c)) { trim(); }

  static Poly constant(Elem c) { return Poly(std::vector<Elem>{std::move(c)}); }
  static Poly monomial(Elem c, std::size_t n) {
    std::vector<Elem> v(n + 1);
    v[n] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  std::int64_t degree() const { return c_.empty() ? kZeroDegree : static_cast<std::int64_t>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of x^i; zero outside [0, deg].
  Elem coeff(std::int64_t i) const {
    if (i < 0 || i >= static_cast<std::int64_t>(c_.size())) return Elem{};
    return c_[static_cast<std::size_t>(i)];
  }
  const Elem& operator[](std::size_t i) const { return c_[i]; }
  Elem lead() const { return c_.empty() ? Elem{} : c_.back(); }

  const std::vector<Elem>& coeffs() const { return c_; }
  std::vector<Elem> release() && { return std::move(c_); }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Elem{}) c_.pop_back();
  }

  std::vector<Elem> c_;
};

template <Field F>
std::int64_t degree(const Poly<F>& p) {
  return p.degree();
}

/// U_{i;j} = U_i + U_{i+1} x + ... + U_{j-1} x^{j-1-i}, reading coefficients
/// outside [0, deg U] as zero. Empty when j <= i.
template <Field F>
Poly<F> slice(const Poly<F>& u, std::int64_t i, std::int64_t j) {
  using Elem = typename F::Elem;
  std::int64_t end = std::min<std::int64_t>(j, static_cast<std::int64_t>(u.size()));
  if (end <= i || end <= 0) return {};
  std::vector<Elem> out(static_cast<std::size_t>(end - i));
  std::int64_t from = std::max<std::int64_t>(i, 0);
  std::copy(u.coeffs().begin() + from, u.coeffs().begin() + end, out.begin() + (from - i));
  return Poly<F>(std::move(out));
}

/// U_{i;} = U_{i; deg U + 1}.
template <Field F>
Poly<F> slice(const Poly<F>& u, std::int64_t i) {
  return slice(u, i, static_cast<std::int64_t>(u.size()));
}

template <Field F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b, CostCounter& cc) {
  const auto& x = a.size() >= b.size() ? a.coeffs() : b.coeffs();
  const auto& y = a.size() >= b.size() ? b.coeffs() : a.coeffs();
  std::vector<typename F::Elem> out(x);
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = f.add(out[i], y[i]);
  cc.adds(y.size());
  return Poly<F>(std::move(out));
}

template <Field F>
Poly<F> neg(const F& f, const Poly<F>& a) {
  std::vector<typename F::Elem> out(a.coeffs());
  for (auto& c : out) c = f.neg(c);
  return Poly<F>(std::move(out));
}

template <Field F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b, CostCounter& cc) {
  std::vector<typename F::Elem> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.sub(out[i], b[i]);
  cc.adds(std::min(a.size(), b.size()));
  return Poly<F>(std::move(out));
}

template <Field F>
Poly<F> scale(const F& f, const Poly<F>& a, const typename F::Elem& c, CostCounter& cc) {
  std::vector<typename F::Elem> out(a.coeffs());
  for (auto& x : out) x = f.mul(x, c);
  cc.mults(out.size());
  return Poly<F>(std::move(out));
}

/// a * x^n.
template <Field F>
Poly<F> shift(const Poly<F>& a, std::size_t n) {
  if (a.is_zero()) return {};
  std::vector<typename F::Elem> out(a.size() + n);
  std::copy(a.coeffs().begin(), a.coeffs().end(), out.begin() + static_cast<std::ptrdiff_t>(n));
  return Poly<F>(std::move(out));
}

/// a rem x^n.
template <Field F>
Poly<F> truncate(const Poly<F>& a, std::size_t n) {
  return slice(a, 0, static_cast<std::int64_t>(n));
}

/// a rem (x^n - 1) as a dense vector of exactly n entries.
template <Field F>
std::vector<typename F::Elem> fold(const F& f, const Poly<F>& a, std::size_t n, CostCounter& cc) {
  std::vector<typename F::Elem> out(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i < n) {
      out[i] = a[i];
    } else {
      out[i % n] = f.add(out[i % n], a[i]);
      cc.adds(1);
    }
  }
  return out;
}

/// x^(n-1) a(1/x) for deg a < n.
template <Field F>
Poly<F> reverse(const Poly<F>& a, std::size_t n) {
  std::vector<typename F::Elem> out(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) out[n - 1 - i] = a[i];
  return Poly<F>(std::move(out));
}

template <Field F>
typename F::Elem evaluate(const F& f, const Poly<F>& a, const typename F::Elem& x, CostCounter& cc) {
  typename F::Elem acc = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  cc.mults(a.size());
  cc.adds(a.size());
  return acc;
}

/// a / lc(a); zero stays zero.
template <Field F>
Poly<F> monic(const F& f, const Poly<F>& a, CostCounter& cc) {
  if (a.is_zero()) return a;
  cc.divs(1);
  return scale(f, a, f.inv(a.lead()), cc);
}

template <Field F>
Poly<F> from_ints(const F& f, const std::vector<std::int64_t>& v) {
  std::vector<typename F::Elem> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(f.from_int(x));
  return Poly<F>(std::move(out));
}

/// Human-readable form, highest degree first, for diagnostics.
template <Field F>
std::string to_string(const F& f, const Poly<F>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == typename F::Elem{}) continue;
    if (!s.empty()) s += " + ";
    s += "(" + f.to_string(a[i]) + ")";
    if (i > 0) s += "x^" + std::to_string(i);
  }
  return s;
}

}  // namespace halfgcd

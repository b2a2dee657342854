#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "halfgcd/ntt.hpp"
#include "halfgcd/poly_arith.hpp"

namespace halfgcd {

/// 2x2 matrix of polynomials, entries stored row-major:
/// e[0] = m11, e[1] = m12, e[2] = m21, e[3] = m22.
template <Field F>
struct Mat2 {
  std::array<Poly<F>, 4> e;

  const Poly<F>& operator()(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }
  Poly<F>& operator()(int i, int j) { return e[static_cast<std::size_t>(2 * i + j)]; }

  static Mat2 identity(const F& f) {
    return {{Poly<F>::constant(f.one()), Poly<F>{}, Poly<F>{}, Poly<F>::constant(f.one())}};
  }
  /// [[0, 1], [1, -q]].
  static Mat2 elementary(const F& f, const Poly<F>& q) {
    return {{Poly<F>{}, Poly<F>::constant(f.one()), Poly<F>::constant(f.one()), neg(f, q)}};
  }

  std::int64_t degree() const {
    std::int64_t d = kZeroDegree;
    for (const auto& p : e) d = std::max(d, p.degree());
    return d;
  }

  bool operator==(const Mat2& o) const { return e == o.e; }
};

/// 2x2 matrix of field elements, row-major.
template <Field F>
using ScalarMat2 = std::array<typename F::Elem, 4>;

/// The matrix of coefficients of x^i.
template <Field F>
ScalarMat2<F> coefficient_matrix(const Mat2<F>& m, std::int64_t i) {
  return {m.e[0].coeff(i), m.e[1].coeff(i), m.e[2].coeff(i), m.e[3].coeff(i)};
}

template <Field F>
ScalarMat2<F> scalar_mul(const F& f, const ScalarMat2<F>& a, const ScalarMat2<F>& b, CostCounter& cc) {
  ScalarMat2<F> r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      r[2 * i + j] = f.add(f.mul(a[2 * i], b[j]), f.mul(a[2 * i + 1], b[2 + j]));
    }
  }
  cc.mults(8);
  cc.adds(4);
  return r;
}

template <Field F>
Mat2<F> mat_add(const F& f, const Mat2<F>& a, const Mat2<F>& b, CostCounter& cc) {
  Mat2<F> r;
  for (std::size_t i = 0; i < 4; ++i) r.e[i] = add(f, a.e[i], b.e[i], cc);
  return r;
}

template <Field F>
Mat2<F> mat_scale(const F& f, const Mat2<F>& a, const typename F::Elem& c, CostCounter& cc) {
  Mat2<F> r;
  for (std::size_t i = 0; i < 4; ++i) r.e[i] = scale(f, a.e[i], c, cc);
  return r;
}

/// A * B with eight polynomial products.
template <Field F>
Mat2<F> mat_mul(const F& f, const Mat2<F>& a, const Mat2<F>& b, const MulBackend& be, CostCounter& cc) {
  Mat2<F> r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      r(i, j) = add(f, mul(f, a(i, 0), b(0, j), be, cc), mul(f, a(i, 1), b(1, j), be, cc), cc);
    }
  }
  return r;
}

/// M * (P, Q)^T.
template <Field F>
std::pair<Poly<F>, Poly<F>> apply(const F& f, const Mat2<F>& m, const Poly<F>& p, const Poly<F>& q,
                                  const MulBackend& be, CostCounter& cc) {
  return {add(f, mul(f, m(0, 0), p, be, cc), mul(f, m(0, 1), q, be, cc), cc),
          add(f, mul(f, m(1, 0), p, be, cc), mul(f, m(1, 1), q, be, cc), cc)};
}

template <Field F>
Poly<F> determinant(const F& f, const Mat2<F>& m, const MulBackend& be, CostCounter& cc) {
  return sub(f, mul(f, m(0, 0), m(1, 1), be, cc), mul(f, m(0, 1), m(1, 0), be, cc), cc);
}

/// Entrywise-combined middle product: result(i, j) = sum_k M(i, k) |x|_d RHS(k, j).
/// Requires deg M == d (the maximum entry degree) and RHS entry degrees < n.
template <Field F>
Mat2<F> mat_middle_product(const F& f, const Mat2<F>& m, std::int64_t d, const Mat2<F>& rhs, std::int64_t n,
                           const MulBackend& be, CostCounter& cc) {
  if (m.degree() != d) throw DegreeMismatch("matrix middle product expects deg M = " + std::to_string(d));
  if (rhs.degree() >= n) throw LengthOverflow("matrix middle product operand of degree >= n");
  Mat2<F> r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      r(i, j) = add(f, middle_product_unchecked(f, m(i, 0), d, rhs(0, j), n, be, cc),
                    middle_product_unchecked(f, m(i, 1), d, rhs(1, j), n, be, cc), cc);
    }
  }
  return r;
}

using PrimeMat2 = Mat2<PrimeField>;
using PrimeScalarMat2 = ScalarMat2<PrimeField>;

/// Per-point 2x2 matrices in natural evaluation order, stored as four
/// entry spectra.
struct Mat2Spectrum {
  std::uint64_t n = 0;
  std::array<SpectrumVec, 4> e;

  static Mat2Spectrum identity(std::uint64_t n);
  bool operator==(const Mat2Spectrum& o) const { return n == o.n && e == o.e; }
};

/// Entrywise dft at length n; four forward transforms.
Mat2Spectrum mat_dft(const TransformPlan& plan, const PrimeMat2& m, std::uint64_t n, CostCounter& cc);

/// Entrywise dft of M rem (x^n - 1); accepts entries of any degree.
Mat2Spectrum mat_dft_wrapped(const TransformPlan& plan, const PrimeMat2& m, std::uint64_t n, CostCounter& cc);

/// Entrywise inverse_dft; four inverse transforms.
PrimeMat2 mat_idft(const TransformPlan& plan, const Mat2Spectrum& s, CostCounter& cc);

/// Pointwise 2x2 products, eight multiplications per point.
Mat2Spectrum spectrum_mul(const PrimeField& f, const Mat2Spectrum& a, const Mat2Spectrum& b, CostCounter& cc);

/// The exact product S T of two matrices of degree at most k given by their
/// length-k spectra, when deg(ST) <= k: the inverse transform of the
/// pointwise product plus (lead_left * lead_right)(x^k - 1).
PrimeMat2 mat_mul_wrapped(const TransformPlan& plan, const Mat2Spectrum& s, const Mat2Spectrum& t,
                          const PrimeScalarMat2& lead_left, const PrimeScalarMat2& lead_right, CostCounter& cc);

/// Matrix middle product through transforms of length next_pow2(n). With
/// a cached spectrum of M at that length only the right-hand side is
/// transformed: four forward and four inverse transforms.
PrimeMat2 mat_middle_product_fft(const TransformPlan& plan, const PrimeMat2& m, std::int64_t d, const PrimeMat2& rhs,
                                 std::int64_t n, CostCounter& cc, const Mat2Spectrum* cached = nullptr);

}  // namespace halfgcd

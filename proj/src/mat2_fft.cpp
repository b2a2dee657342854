#include <string>

#include "halfgcd/mat2.hpp"

namespace halfgcd {

using Elem = PrimeField::Elem;

Mat2Spectrum Mat2Spectrum::identity(std::uint64_t n) {
  Mat2Spectrum s;
  s.n = n;
  s.e[0] = SpectrumVec(n, 1);
  s.e[1] = SpectrumVec(n, 0);
  s.e[2] = SpectrumVec(n, 0);
  s.e[3] = SpectrumVec(n, 1);
  return s;
}

Mat2Spectrum mat_dft(const TransformPlan& plan, const PrimeMat2& m, std::uint64_t n, CostCounter& cc) {
  Mat2Spectrum s;
  s.n = n;
  for (std::size_t i = 0; i < 4; ++i) s.e[i] = dft(plan, m.e[i], n, cc);
  return s;
}

Mat2Spectrum mat_dft_wrapped(const TransformPlan& plan, const PrimeMat2& m, std::uint64_t n, CostCounter& cc) {
  Mat2Spectrum s;
  s.n = n;
  for (std::size_t i = 0; i < 4; ++i) {
    s.e[i] = fold(plan.field(), m.e[i], n, cc);
    detail::forward_inplace(plan, s.e[i], cc);
  }
  return s;
}

PrimeMat2 mat_idft(const TransformPlan& plan, const Mat2Spectrum& s, CostCounter& cc) {
  PrimeMat2 m;
  for (std::size_t i = 0; i < 4; ++i) m.e[i] = inverse_dft(plan, s.e[i], cc);
  return m;
}

Mat2Spectrum spectrum_mul(const PrimeField& f, const Mat2Spectrum& a, const Mat2Spectrum& b, CostCounter& cc) {
  if (a.n != b.n) throw LengthMismatch("spectra of lengths " + std::to_string(a.n) + " and " + std::to_string(b.n));
  Mat2Spectrum r;
  r.n = a.n;
  for (auto& v : r.e) v.resize(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    Elem a11 = a.e[0][i], a12 = a.e[1][i], a21 = a.e[2][i], a22 = a.e[3][i];
    Elem b11 = b.e[0][i], b12 = b.e[1][i], b21 = b.e[2][i], b22 = b.e[3][i];
    r.e[0][i] = f.add(f.mul(a11, b11), f.mul(a12, b21));
    r.e[1][i] = f.add(f.mul(a11, b12), f.mul(a12, b22));
    r.e[2][i] = f.add(f.mul(a21, b11), f.mul(a22, b21));
    r.e[3][i] = f.add(f.mul(a21, b12), f.mul(a22, b22));
  }
  cc.mults(8 * a.n);
  cc.adds(4 * a.n);
  return r;
}

PrimeMat2 mat_mul_wrapped(const TransformPlan& plan, const Mat2Spectrum& s, const Mat2Spectrum& t,
                          const PrimeScalarMat2& lead_left, const PrimeScalarMat2& lead_right, CostCounter& cc) {
  const PrimeField& f = plan.field();
  Mat2Spectrum prod = spectrum_mul(f, s, t, cc);
  PrimeScalarMat2 lead = scalar_mul(f, lead_left, lead_right, cc);
  PrimeMat2 r;
  std::uint64_t k = s.n;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Elem> c = std::move(inverse_dft(plan, prod.e[i], cc)).release();
    c.resize(k + 1);
    c[0] = f.sub(c[0], lead[i]);
    c[k] = f.add(c[k], lead[i]);
    r.e[i] = PrimePoly(std::move(c));
  }
  cc.adds(8);
  return r;
}

PrimeMat2 mat_middle_product_fft(const TransformPlan& plan, const PrimeMat2& m, std::int64_t d, const PrimeMat2& rhs,
                                 std::int64_t n, CostCounter& cc, const Mat2Spectrum* cached) {
  if (m.degree() != d) throw DegreeMismatch("matrix middle product expects deg M = " + std::to_string(d));
  if (rhs.degree() >= n) throw LengthOverflow("matrix middle product operand of degree >= n");
  std::uint64_t len = detail::next_pow2(static_cast<std::uint64_t>(n));
  Mat2Spectrum ms;
  if (cached != nullptr) {
    if (cached->n != len) throw LengthMismatch("cached spectrum has the wrong length");
  } else {
    ms = mat_dft(plan, m, len, cc);
    cached = &ms;
  }
  Mat2Spectrum rs = mat_dft(plan, rhs, len, cc);
  Mat2Spectrum prod = spectrum_mul(plan.field(), *cached, rs, cc);
  PrimeMat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.e[i] = slice(inverse_dft(plan, prod.e[i], cc), d, n);
  return r;
}

}  // namespace halfgcd

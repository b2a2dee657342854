// Transform-based half-gcd recursions.
//
// Internally a recursion of transform length n returns the coefficient
// form of its matrix multiplied by n, together with the true spectrum.
// Bezout matrices do not change when P and Q are scaled by a common
// constant, so the remainders fed to the children may carry the same
// factor; this drops every 1/n scaling from the inner inverse transforms.
// The public entry points divide the factor out once at the end.

#include <bit>
#include <string>

#include "halfgcd/hgcd.hpp"

namespace halfgcd {

using Elem = PrimeField::Elem;

namespace {

struct Scaled {
  PrimeMat2 coeffs;  // n * B
  Mat2Spectrum spectrum;
};

std::uint64_t as_len(std::int64_t n) { return static_cast<std::uint64_t>(n); }

int log2_exact(std::uint64_t n) { return std::countr_zero(n); }

Mat2Spectrum spectrum_at_one(const PrimeField& f, const PrimeMat2& m, CostCounter& cc) {
  Mat2Spectrum s;
  s.n = 1;
  for (std::size_t i = 0; i < 4; ++i) {
    Elem acc = 0;
    for (Elem c : m.e[i].coeffs()) acc = f.add(acc, c);
    cc.adds(m.e[i].size());
    s.e[i] = SpectrumVec{acc};
  }
  return s;
}

// Spectrum at length 2h of a matrix given as (h * B, DFT_h(B)).
Mat2Spectrum double_scaled(const TransformPlan& plan, const Scaled& half, CostCounter& cc) {
  std::uint64_t n = 2 * half.spectrum.n;
  const auto& twist = plan.scaled_twist(plan.log_length(n));
  Mat2Spectrum s;
  s.n = n;
  for (std::size_t i = 0; i < 4; ++i) {
    s.e[i] = detail::double_with_twist(plan, half.coeffs.e[i].coeffs(), half.spectrum.e[i], twist, cc);
  }
  return s;
}

// Doubles every coefficient: turns (n/2) * B into n * B.
PrimeMat2 twice(const PrimeField& f, const PrimeMat2& m, CostCounter& cc) {
  PrimeMat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.e[i] = add(f, m.e[i], m.e[i], cc);
  return r;
}

PrimeMat2 scaled_identity(const PrimeField& f, std::uint64_t n) {
  Elem c = f.from_unsigned(n);
  return {{PrimePoly::constant(c), PrimePoly{}, PrimePoly{}, PrimePoly::constant(c)}};
}

// Columns of the middle product right-hand side: entry (r, j) is
// X_r{a + j c - m; a + (j + 1) c} for X_0 = P, X_1 = Q.
PrimeMat2 block_rhs(const PrimePoly& p, const PrimePoly& q, std::int64_t a, std::int64_t c, std::int64_t m) {
  PrimeMat2 rhs;
  for (int j = 0; j < 2; ++j) {
    rhs(0, j) = slice(p, a + j * c - m, a + (j + 1) * c);
    rhs(1, j) = slice(q, a + j * c - m, a + (j + 1) * c);
  }
  return rhs;
}

// Raw (unscaled) inverse of each entry, keeping coefficients [lo, lo + len).
std::array<std::vector<Elem>, 4> raw_inverse_window(const TransformPlan& plan, Mat2Spectrum s, std::size_t lo,
                                                    std::size_t len, CostCounter& cc) {
  std::array<std::vector<Elem>, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    detail::inverse_raw_inplace(plan, s.e[i], cc);
    out[i].assign(s.e[i].begin() + static_cast<std::ptrdiff_t>(lo),
                  s.e[i].begin() + static_cast<std::ptrdiff_t>(lo + len));
  }
  return out;
}

// The middle product of M (spectrum `mhat` at length n, degree m) with the
// block right-hand side, producing c coefficients per column, all carrying
// a factor n. Returns (P~, Q~) from coefficient a on, with `top` as the
// first entry's leading coefficient.
std::pair<PrimePoly, PrimePoly> fft_update(const TransformPlan& plan, const Mat2Spectrum& mhat, const PrimePoly& p,
                                           const PrimePoly& q, std::int64_t a, std::int64_t c, std::int64_t m,
                                           Elem top, CostCounter& cc) {
  const PrimeField& f = plan.field();
  PrimeMat2 rhs = block_rhs(p, q, a, c, m);
  Mat2Spectrum rs;
  rs.n = mhat.n;
  for (std::size_t i = 0; i < 4; ++i) {
    rs.e[i] = SpectrumVec(mhat.n);
    std::copy(rhs.e[i].coeffs().begin(), rhs.e[i].coeffs().end(), rs.e[i].begin());
    detail::forward_inplace(plan, rs.e[i], cc);
  }
  auto w = raw_inverse_window(plan, spectrum_mul(f, mhat, rs, cc), as_len(m), as_len(c), cc);
  std::vector<Elem> pc(as_len(2 * c + 1)), qc(as_len(2 * c));
  std::copy(w[0].begin(), w[0].end(), pc.begin());
  std::copy(w[1].begin(), w[1].end(), pc.begin() + c);
  std::copy(w[2].begin(), w[2].end(), qc.begin());
  std::copy(w[3].begin(), w[3].end(), qc.begin() + c);
  pc.back() = top;
  return {PrimePoly(std::move(pc)), PrimePoly(std::move(qc))};
}

// n * (S T) from the spectrum of the product; `lead` is the already scaled
// coefficient of x^n to restore, or null when the product has degree < n.
PrimeMat2 wrapped_product(const TransformPlan& plan, const Mat2Spectrum& prod, const PrimeScalarMat2* lead,
                          CostCounter& cc) {
  const PrimeField& f = plan.field();
  std::size_t n = prod.n;
  PrimeMat2 r;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Elem> c(prod.e[i]);
    detail::inverse_raw_inplace(plan, c, cc);
    if (lead != nullptr) {
      c.resize(n + 1);
      c[0] = f.sub(c[0], (*lead)[i]);
      c[n] = f.add(c[n], (*lead)[i]);
      cc.adds(2);
    }
    r.e[i] = PrimePoly(std::move(c));
  }
  return r;
}

// Product of two leading coefficient matrices that each carry a factor h,
// rescaled to carry the factor 2h of the parent.
PrimeScalarMat2 parent_lead(const PrimeField& f, const PrimeScalarMat2& left, const PrimeScalarMat2& right,
                            std::int64_t h, CostCounter& cc) {
  PrimeScalarMat2 lead = scalar_mul(f, left, right, cc);
  Elem s = f.div(2, f.from_int(h));
  cc.divs(1);
  for (auto& x : lead) x = f.mul(x, s);
  cc.mults(4);
  return lead;
}

void record(CostCounter& cc, CostCounter& own, const char* algorithm, std::int64_t k, std::uint64_t length,
            std::int64_t degeneracy, const std::map<std::uint64_t, TransformTally>& division = {}) {
  if (cc.trace != nullptr) {
    cc.trace->push_back({algorithm, k, length, degeneracy, own.transforms, own.field_mults, division});
  }
  cc += own;
}

PrimeMat2 unscale(const PrimeField& f, const PrimeMat2& m, std::uint64_t n, CostCounter& cc) {
  if (n == 1) return m;
  cc.divs(1);
  return mat_scale(f, m, f.inv(f.from_unsigned(n)), cc);
}

// Normal case, k a power of two, deg P = 2k. Returns (k * B_{1;k+1}, DFT_k).
Scaled normal_fft_rec(const TransformPlan& plan, const PrimePoly& p, const PrimePoly& q, std::int64_t k,
                      const HgcdOptions& opt, CostCounter& cc) {
  const PrimeField& f = plan.field();
  if (k == 1) {
    if (q.degree() != p.degree() - 1) throw AbnormalSequence("quotient 1 does not have degree 1");
    PrimeMat2 b = detail::single_step(f, p, q, opt.backend, cc);
    Mat2Spectrum s = spectrum_at_one(f, b, cc);
    return {std::move(b), std::move(s)};
  }
  if (k <= opt.threshold) {
    PrimeMat2 b = detail::naive_normal(f, p, q, k, opt.backend, cc);
    Mat2Spectrum s = mat_dft_wrapped(plan, b, as_len(k), cc);
    return {mat_scale(f, b, f.from_int(k), cc), std::move(s)};
  }
  std::int64_t d = p.degree();
  std::int64_t h = k / 2;

  Scaled left = normal_fft_rec(plan, slice(p, d - 2 * h), slice(q, d - 2 * h), h, opt, cc);
  if (left.coeffs.degree() != h) throw AbnormalSequence("Bezout product of unexpected degree");
  CostCounter own = cc.fresh();
  Mat2Spectrum mhat = double_scaled(plan, left, own);

  Elem top = recover_top_term(f, left.coeffs, p, q, d - h, own);
  top = f.add(top, top);
  own.adds(1);
  auto [pt, qt] = fft_update(plan, mhat, p, q, d - 4 * h + h, h, h, top, own);
  if (qt.degree() != pt.degree() - 1) throw AbnormalSequence("remainder of unexpected degree");

  Scaled right = normal_fft_rec(plan, pt, qt, h, opt, cc);
  Mat2Spectrum mthat = double_scaled(plan, right, own);
  Mat2Spectrum prod = spectrum_mul(f, mthat, mhat, own);
  PrimeScalarMat2 lead =
      parent_lead(f, coefficient_matrix(right.coeffs, h), coefficient_matrix(left.coeffs, h), h, own);
  PrimeMat2 coeffs = wrapped_product(plan, prod, &lead, own);
  record(cc, own, "normal_fft", k, as_len(k), 0);
  return {std::move(coeffs), std::move(prod)};
}

// General case. Returns (ell * B*_{1;k+1}, DFT_ell).
Scaled general_fft_rec(const TransformPlan& plan, const PrimePoly& p, const PrimePoly& q, std::int64_t k,
                       std::int64_t ell, const HgcdOptions& opt, CostCounter& cc) {
  const PrimeField& f = plan.field();
  std::int64_t d = p.degree();
  if (q.degree() < d - k) return {scaled_identity(f, as_len(ell)), Mat2Spectrum::identity(as_len(ell))};
  if (ell == 1) {
    PrimeMat2 b = detail::single_step(f, p, q, opt.backend, cc);
    Mat2Spectrum s = spectrum_at_one(f, b, cc);
    return {std::move(b), std::move(s)};
  }
  if (ell <= opt.threshold) {
    PrimeMat2 b = detail::naive_general(f, p, q, k, opt.backend, cc);
    Mat2Spectrum s = mat_dft_wrapped(plan, b, as_len(ell), cc);
    return {mat_scale(f, b, f.from_int(ell), cc), std::move(s)};
  }
  std::int64_t h = ell / 2;
  if (k <= h) {
    Scaled half = general_fft_rec(plan, p, q, k, h, opt, cc);
    CostCounter own = cc.fresh();
    Mat2Spectrum s = double_scaled(plan, half, own);
    PrimeMat2 coeffs = twice(f, half.coeffs, own);
    record(cc, own, "general_fft", k, as_len(ell), 0);
    return {std::move(coeffs), std::move(s)};
  }

  Scaled left = general_fft_rec(plan, slice(p, d - 2 * h), slice(q, d - 2 * h), h, h, opt, cc);
  CostCounter own = cc.fresh();
  Mat2Spectrum mhat = double_scaled(plan, left, own);
  std::int64_t m = left.coeffs.degree();
  std::int64_t delta = h - m;
  std::int64_t a = d - 3 * h - delta;
  std::int64_t c = h + delta;

  Elem top = recover_top_term(f, left.coeffs, p, q, d - h + delta, own);
  top = f.add(top, top);
  own.adds(1);
  auto [pt, qt] = fft_update(plan, mhat, p, q, a, c, m, top, own);

  if (qt.degree() < d - k - a) {
    PrimeMat2 coeffs = twice(f, left.coeffs, own);
    record(cc, own, "general_fft", k, as_len(ell), delta);
    return {std::move(coeffs), std::move(mhat)};
  }

  PrimeScalarMat2 lead_m = coefficient_matrix(left.coeffs, m);
  std::int64_t hp = k - h;
  std::map<std::uint64_t, TransformTally> division;
  if (delta > 0) {
    CostCounter dc = own.fresh();
    PrimePoly dq = quotient(f, pt, qt, MulBackend::ntt(plan), dc);
    division = dc.transforms;
    own += dc;
    std::int64_t e = dq.degree();
    SpectrumVec dhat = fold(f, dq, as_len(ell), own);
    detail::forward_inplace(plan, dhat, own);
    // M^ := J^ M^ with J = [[0, 1], [1, -D]].
    Mat2Spectrum jm;
    jm.n = mhat.n;
    jm.e[0] = mhat.e[2];
    jm.e[1] = mhat.e[3];
    jm.e[2] = SpectrumVec(mhat.n);
    jm.e[3] = SpectrumVec(mhat.n);
    for (std::size_t i = 0; i < mhat.n; ++i) {
      jm.e[2][i] = f.sub(mhat.e[0][i], f.mul(dhat[i], mhat.e[2][i]));
      jm.e[3][i] = f.sub(mhat.e[1][i], f.mul(dhat[i], mhat.e[3][i]));
    }
    own.mults(2 * mhat.n);
    own.adds(2 * mhat.n);
    mhat = std::move(jm);
    Elem neg_lc = f.neg(dq.lead());
    lead_m = {0, 0, f.mul(neg_lc, lead_m[2]), f.mul(neg_lc, lead_m[3])};
    own.mults(2);

    hp = k - h + delta - e;
    std::int64_t t = d - k - hp - a;
    // New Q~ = P~ - D Q~ on the 2h' coefficients from t, by middle products
    // against the cached D^ in chunks that fit the transform length.
    std::vector<Elem> corr(as_len(2 * hp));
    Elem inv_ell = plan.inverse_length(log2_exact(as_len(ell)));
    std::int64_t chunk = ell - e;
    for (std::int64_t start = 0; start < 2 * hp; start += chunk) {
      std::int64_t len = std::min(chunk, 2 * hp - start);
      PrimePoly r = slice(qt, t - e + start, t + start + len);
      SpectrumVec rs(as_len(ell));
      std::copy(r.coeffs().begin(), r.coeffs().end(), rs.begin());
      detail::forward_inplace(plan, rs, own);
      for (std::size_t i = 0; i < rs.size(); ++i) rs[i] = f.mul(rs[i], dhat[i]);
      own.mults(rs.size());
      detail::inverse_raw_inplace(plan, rs, own);
      for (std::int64_t i = 0; i < len; ++i) corr[as_len(start + i)] = f.mul(rs[as_len(e + i)], inv_ell);
      own.mults(as_len(len));
    }
    PrimePoly pn = slice(qt, t);
    PrimePoly qn = sub(f, slice(pt, t, t + 2 * hp), PrimePoly(std::move(corr)), own);
    pt = std::move(pn);
    qt = std::move(qn);
  } else {
    std::int64_t t = d - k - hp - a;
    pt = slice(pt, t);
    qt = slice(qt, t);
  }

  Scaled right = general_fft_rec(plan, pt, qt, hp, h, opt, cc);
  Mat2Spectrum mthat = double_scaled(plan, right, own);
  Mat2Spectrum prod = spectrum_mul(f, mthat, mhat, own);
  PrimeMat2 coeffs;
  if (k == ell) {
    PrimeScalarMat2 lead = parent_lead(f, coefficient_matrix(right.coeffs, hp), lead_m, h, own);
    coeffs = wrapped_product(plan, prod, &lead, own);
  } else {
    coeffs = wrapped_product(plan, prod, nullptr, own);
  }
  record(cc, own, "general_fft", k, as_len(ell), delta, division);
  return {std::move(coeffs), std::move(prod)};
}

void check_pair(const PrimePoly& p, const PrimePoly& q, std::int64_t k) {
  std::int64_t d = p.degree();
  if (p.is_zero() || k < 0 || k > d) throw PreconditionViolated("half-gcd needs 0 <= k <= deg P");
  if (q.degree() >= d) throw PreconditionViolated("half-gcd needs deg Q < deg P");
}

PrimeMat2 normal_any_rec(const TransformPlan& plan, const PrimePoly& p, const PrimePoly& q, std::int64_t k,
                         const HgcdOptions& opt, CostCounter& cc) {
  const PrimeField& f = plan.field();
  if (k == 0) return PrimeMat2::identity(f);
  std::int64_t d = p.degree();
  std::int64_t h = static_cast<std::int64_t>(std::bit_floor(as_len(k)));
  std::int64_t ht = k - h;
  Scaled first = normal_fft_rec(plan, slice(p, d - 2 * h), slice(q, d - 2 * h), h, opt, cc);
  if (ht == 0) return unscale(f, first.coeffs, as_len(h), cc);
  if (first.coeffs.degree() != h) throw AbnormalSequence("Bezout product of unexpected degree");
  Mat2Spectrum mhat = double_scaled(plan, first, cc);
  PrimeMat2 m = unscale(f, first.coeffs, as_len(h), cc);
  std::int64_t a = d - h - 2 * ht;
  PrimeMat2 t = mat_middle_product_fft(plan, m, h, block_rhs(p, q, a, ht, h), h + ht, cc, &mhat);
  Elem top = recover_top_term(f, m, p, q, d - h, cc);
  std::vector<Elem> pc(as_len(2 * ht + 1)), qc(as_len(2 * ht));
  for (std::int64_t i = 0; i < ht; ++i) {
    pc[as_len(i)] = t(0, 0).coeff(i);
    pc[as_len(ht + i)] = t(0, 1).coeff(i);
    qc[as_len(i)] = t(1, 0).coeff(i);
    qc[as_len(ht + i)] = t(1, 1).coeff(i);
  }
  pc.back() = top;
  PrimePoly pt(std::move(pc)), qt(std::move(qc));
  if (qt.degree() != pt.degree() - 1) throw AbnormalSequence("remainder of unexpected degree");
  PrimeMat2 mt = normal_any_rec(plan, pt, qt, ht, opt, cc);
  return mat_mul(f, mt, m, MulBackend::ntt(plan), cc);
}

}  // namespace

HalfGcdResult hgcd_normal_fft(const TransformPlan& plan, const PrimePoly& p, const PrimePoly& q, std::int64_t k,
                              const HgcdOptions& opt, CostCounter& cc) {
  check_pair(p, q, k);
  if (k < 1 || !std::has_single_bit(as_len(k))) {
    throw PreconditionViolated("transform half-gcd needs k to be a power of two, got " + std::to_string(k));
  }
  plan.log_length(as_len(k));
  std::int64_t d = p.degree();
  Scaled r = normal_fft_rec(plan, slice(p, d - 2 * k), slice(q, d - 2 * k), k, opt, cc);
  return {unscale(plan.field(), r.coeffs, as_len(k), cc), std::move(r.spectrum)};
}

PrimeMat2 hgcd_normal_any(const TransformPlan& plan, const PrimePoly& p, const PrimePoly& q, std::int64_t k,
                          const HgcdOptions& opt, CostCounter& cc) {
  check_pair(p, q, k);
  if (k == 0) return PrimeMat2::identity(plan.field());
  plan.log_length(detail::next_pow2(as_len(k)));
  std::int64_t d = p.degree();
  return normal_any_rec(plan, slice(p, d - 2 * k), slice(q, d - 2 * k), k, opt, cc);
}

HalfGcdResult hgcd_general_fft(const TransformPlan& plan, const PrimePoly& p, const PrimePoly& q, std::int64_t k,
                               const HgcdOptions& opt, CostCounter& cc, std::uint64_t ell) {
  check_pair(p, q, k);
  if (ell == 0) ell = detail::next_pow2(as_len(std::max<std::int64_t>(k, 1)));
  plan.log_length(ell);
  if (as_len(k) > ell) throw PreconditionViolated("transform length must be at least k");
  std::int64_t d = p.degree();
  Scaled r = general_fft_rec(plan, slice(p, d - 2 * k), slice(q, d - 2 * k), k, static_cast<std::int64_t>(ell), opt,
                             cc);
  return {unscale(plan.field(), r.coeffs, ell, cc), std::move(r.spectrum)};
}

}  // namespace halfgcd

#include "halfgcd/ntt.hpp"

#include <bit>
#include <string>
#include <utility>

namespace halfgcd {

using Elem = PrimeField::Elem;

TransformPlan::TransformPlan(PrimeField field, PlanOptions options)
    : field_(std::move(field)), options_(options) {}

bool TransformPlan::supports(std::uint64_t n) const {
  return n != 0 && std::has_single_bit(n) && std::countr_zero(n) <= field_.two_adicity();
}

int TransformPlan::log_length(std::uint64_t n) const {
  if (n == 0 || !std::has_single_bit(n)) {
    throw UnsupportedLength("transform length " + std::to_string(n) + " is not a power of two");
  }
  int lg = std::countr_zero(n);
  if (lg > field_.two_adicity()) {
    throw UnsupportedLength("transform length 2^" + std::to_string(lg) + " exceeds the field's 2^" +
                            std::to_string(field_.two_adicity()));
  }
  return lg;
}

const TransformPlan::Level& TransformPlan::level(int lg) const {
  Level& lv = levels_.at(static_cast<std::size_t>(lg));
  std::call_once(lv.once, [&] {
    const PrimeField& f = field_;
    std::uint64_t n = std::uint64_t{1} << lg;
    std::uint64_t half = n / 2;
    Elem w = f.root_of_unity(lg);
    Elem wi = f.inv(w);
    lv.forward.resize(half);
    lv.inverse.resize(half);
    lv.scaled_twist.resize(half);
    Elem a = 1, b = 1;
    Elem half_inv = half == 0 ? 1 : f.inv(f.from_unsigned(half));
    for (std::uint64_t j = 0; j < half; ++j) {
      lv.forward[j] = a;
      lv.inverse[j] = b;
      lv.scaled_twist[j] = f.mul(a, half_inv);
      a = f.mul(a, w);
      b = f.mul(b, wi);
    }
    lv.inv_n = f.inv(f.from_unsigned(n));
    if (options_.corrupt_twiddles && half >= 2) lv.forward[1] = f.add(lv.forward[1], 1);
  });
  return lv;
}

namespace {

void bit_reverse(std::vector<Elem>& a) {
  std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

// Decimation in time over bit-reversed input; one multiplication per
// butterfly, including the trivial ones, so the count is (n/2) log2 n.
void butterflies(const TransformPlan& plan, std::vector<Elem>& a, bool inverse) {
  const PrimeField& f = plan.field();
  std::size_t n = a.size();
  bit_reverse(a);
  int lg = 1;
  for (std::size_t len = 2; len <= n; len <<= 1, ++lg) {
    const auto& tw = inverse ? plan.inverse_twiddles(lg) : plan.twiddles(lg);
    std::size_t half = len / 2;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        Elem u = a[start + j];
        Elem v = f.mul(a[start + j + half], tw[j]);
        a[start + j] = f.add(u, v);
        a[start + j + half] = f.sub(u, v);
      }
    }
  }
}

void count_butterflies(std::size_t n, CostCounter& cc) {
  std::uint64_t lg = static_cast<std::uint64_t>(std::countr_zero(n));
  cc.mults(n / 2 * lg);
  cc.adds(n * lg);
}

}  // namespace

namespace detail {

void forward_inplace(const TransformPlan& plan, std::vector<Elem>& a, CostCounter& cc) {
  plan.log_length(a.size());
  butterflies(plan, a, false);
  count_butterflies(a.size(), cc);
  cc.forward(a.size());
}

void inverse_raw_inplace(const TransformPlan& plan, std::vector<Elem>& a, CostCounter& cc) {
  plan.log_length(a.size());
  butterflies(plan, a, true);
  count_butterflies(a.size(), cc);
  cc.inverse(a.size());
}

SpectrumVec double_with_twist(const TransformPlan& plan, const std::vector<Elem>& coeffs, const SpectrumVec& half,
                              const std::vector<Elem>& twist, CostCounter& cc) {
  const PrimeField& f = plan.field();
  std::size_t h = half.size();
  std::size_t n = 2 * h;
  if (coeffs.size() > n) throw LengthOverflow("doubling input longer than the target length");
  std::vector<Elem> odd(h);
  for (std::size_t j = 0; j < h; ++j) {
    Elem lo = j < coeffs.size() ? coeffs[j] : 0;
    Elem hi = j + h < coeffs.size() ? coeffs[j + h] : 0;
    odd[j] = f.mul(f.sub(lo, hi), twist[j]);
  }
  cc.mults(h);
  cc.adds(h);
  plan.log_length(h);
  butterflies(plan, odd, false);
  count_butterflies(h, cc);
  cc.doubling(h);
  SpectrumVec out(n);
  for (std::size_t i = 0; i < h; ++i) {
    out[2 * i] = half[i];
    out[2 * i + 1] = odd[i];
  }
  return out;
}

}  // namespace detail

SpectrumVec dft(const TransformPlan& plan, const PrimePoly& p, std::uint64_t n, CostCounter& cc) {
  plan.log_length(n);
  if (p.degree() >= static_cast<std::int64_t>(n)) {
    throw LengthOverflow("degree " + std::to_string(p.degree()) + " does not fit transform length " +
                         std::to_string(n));
  }
  SpectrumVec a(n);
  std::copy(p.coeffs().begin(), p.coeffs().end(), a.begin());
  detail::forward_inplace(plan, a, cc);
  return a;
}

PrimePoly inverse_dft(const TransformPlan& plan, const SpectrumVec& v, CostCounter& cc) {
  int lg = plan.log_length(v.size());
  std::vector<Elem> a(v);
  detail::inverse_raw_inplace(plan, a, cc);
  Elem s = plan.inverse_length(lg);
  for (auto& x : a) x = plan.field().mul(x, s);
  cc.mults(a.size());
  return PrimePoly(std::move(a));
}

SpectrumVec fft_double(const TransformPlan& plan, const PrimePoly& p, const SpectrumVec& half, CostCounter& cc) {
  if (half.empty() || !std::has_single_bit(half.size())) {
    throw LengthMismatch("half spectrum length " + std::to_string(half.size()) + " is not a power of two");
  }
  std::uint64_t n = 2 * half.size();
  int lg = plan.log_length(n);
  if (p.degree() >= static_cast<std::int64_t>(n)) throw LengthOverflow("polynomial too long for doubling");
  return detail::double_with_twist(plan, p.coeffs(), half, plan.twiddles(lg), cc);
}

}  // namespace halfgcd

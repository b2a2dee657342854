#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "halfgcd/cost.hpp"
#include "halfgcd/field.hpp"
#include "halfgcd/poly.hpp"

namespace halfgcd {

using PrimePoly = Poly<PrimeField>;

/// Evaluation vector of length n = 2^k; entry i holds P(omega_n^i).
using SpectrumVec = std::vector<PrimeField::Elem>;

struct PlanOptions {
  /// Test hook: perturb one twiddle factor per table so transforms are wrong.
  bool corrupt_twiddles = false;
};

/// Root-of-unity tables for radix-2 transforms over one prime field.
/// Tables are built on first use per length and then never change, so a
/// plan may be shared between threads.
class TransformPlan {
 public:
  using Elem = PrimeField::Elem;

  explicit TransformPlan(PrimeField field, PlanOptions options = {});
  TransformPlan(const TransformPlan&) = delete;
  TransformPlan& operator=(const TransformPlan&) = delete;

  const PrimeField& field() const { return field_; }
  int max_log_length() const { return field_.two_adicity(); }
  bool supports(std::uint64_t n) const;

  /// omega_n^j for j < n/2, n = 2^lg.
  const std::vector<Elem>& twiddles(int lg) const { return level(lg).forward; }
  /// omega_n^-j for j < n/2.
  const std::vector<Elem>& inverse_twiddles(int lg) const { return level(lg).inverse; }
  /// omega_n^j / (n/2) for j < n/2: the doubling twist for inputs that
  /// carry a factor n/2.
  const std::vector<Elem>& scaled_twist(int lg) const { return level(lg).scaled_twist; }
  Elem inverse_length(int lg) const { return level(lg).inv_n; }

  /// log2 n; throws UnsupportedLength unless n is a supported power of two.
  int log_length(std::uint64_t n) const;

 private:
  struct Level {
    std::once_flag once;
    std::vector<Elem> forward, inverse, scaled_twist;
    Elem inv_n = 1;
  };
  const Level& level(int lg) const;

  PrimeField field_;
  PlanOptions options_;
  mutable std::array<Level, 64> levels_;
};

/// (P(omega_n^0), ..., P(omega_n^(n-1))). Throws LengthOverflow if
/// deg P >= n and UnsupportedLength if n is not a supported power of two.
SpectrumVec dft(const TransformPlan& plan, const PrimePoly& p, std::uint64_t n, CostCounter& cc);

/// Inverse of dft.
PrimePoly inverse_dft(const TransformPlan& plan, const SpectrumVec& v, CostCounter& cc);

/// dft(P, n) from half = dft(P, n/2) using one transform of length n/2.
SpectrumVec fft_double(const TransformPlan& plan, const PrimePoly& p, const SpectrumVec& half, CostCounter& cc);

namespace detail {

/// In-place forward transform of a dense vector whose size is a power of two.
void forward_inplace(const TransformPlan& plan, std::vector<PrimeField::Elem>& a, CostCounter& cc);

/// In-place inverse transform without the final 1/n scaling; the result
/// equals n times the true inverse.
void inverse_raw_inplace(const TransformPlan& plan, std::vector<PrimeField::Elem>& a, CostCounter& cc);

/// Doubling with a caller-chosen twist table: odd points are the transform
/// of twist[j] * (c_j - c_{j+n/2}). `coeffs` has at most n entries.
SpectrumVec double_with_twist(const TransformPlan& plan, const std::vector<PrimeField::Elem>& coeffs,
                              const SpectrumVec& half, const std::vector<PrimeField::Elem>& twist,
                              CostCounter& cc);

}  // namespace detail

}  // namespace halfgcd

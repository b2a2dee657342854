#include "halfgcd/generators.hpp"

#include <algorithm>

namespace halfgcd {

std::pair<PrimePoly, PrimePoly> random_normal_pair(const TransformPlan& plan, std::int64_t d, std::mt19937_64& rng) {
  const PrimeField& f = plan.field();
  for (;;) {
    PrimePoly p = random_poly(f, d, rng);
    PrimePoly q = random_poly(f, d - 1, rng);
    if (d <= 1) return {p, q};
    try {
      CostCounter scratch;
      hgcd_normal_any(plan, p, q, d, HgcdOptions{}, scratch);
      return {p, q};
    } catch (const AbnormalSequence&) {
    }
  }
}

std::vector<std::int64_t> planted_quotient_degrees(std::int64_t total, std::int64_t d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::int64_t big = std::max<std::int64_t>(4, d / 8);
  std::vector<std::int64_t> out;
  while (total > 0) {
    double x = u(rng);
    std::int64_t e = 1;
    if (x >= 0.95) {
      e = std::uniform_int_distribution<std::int64_t>(4, big)(rng);
    } else if (x >= 0.85) {
      e = 3;
    } else if (x >= 0.60) {
      e = 2;
    }
    e = std::min(e, total);
    out.push_back(e);
    total -= e;
  }
  return out;
}

namespace {

using Elem = PrimeField::Elem;

// C_lo ... C_{hi-1}
PrimeMat2 cofactor_product(const PrimeField& f, const std::vector<PrimePoly>& qs, std::size_t lo, std::size_t hi,
                           const MulBackend& be, CostCounter& cc) {
  if (hi - lo == 1) {
    PrimeMat2 c;
    c(0, 0) = qs[lo];
    c(0, 1) = PrimePoly::constant(f.one());
    c(1, 0) = PrimePoly::constant(f.one());
    return c;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  return mat_mul(f, cofactor_product(f, qs, lo, mid, be, cc), cofactor_product(f, qs, mid, hi, be, cc), be, cc);
}

}  // namespace

std::pair<PrimePoly, PrimePoly> planted_pair_with(const TransformPlan& plan, const std::vector<std::int64_t>& degrees,
                                                  std::int64_t gcd_degree, std::mt19937_64& rng) {
  const PrimeField& f = plan.field();
  PrimePoly g = random_poly(f, gcd_degree, rng);
  if (degrees.empty()) return {g, {}};
  std::vector<PrimePoly> qs;
  qs.reserve(degrees.size());
  for (std::int64_t e : degrees) {
    if (e < 1) throw PreconditionViolated("planted quotients need degree >= 1");
    qs.push_back(random_poly(f, e, rng));
  }
  CostCounter scratch;
  MulBackend be = MulBackend::ntt(plan);
  PrimeMat2 c = cofactor_product(f, qs, 0, qs.size(), be, scratch);
  return {mul(f, c(0, 0), g, be, scratch), mul(f, c(1, 0), g, be, scratch)};
}

std::pair<PrimePoly, PrimePoly> planted_pair(const TransformPlan& plan, std::int64_t d, std::mt19937_64& rng,
                                             std::int64_t gcd_degree) {
  gcd_degree = std::clamp<std::int64_t>(gcd_degree, 0, d);
  auto degrees = planted_quotient_degrees(d - gcd_degree, d, rng);
  return planted_pair_with(plan, degrees, gcd_degree, rng);
}

}  // namespace halfgcd

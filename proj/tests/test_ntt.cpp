#include <doctest.h>

#include <random>

#include "halfgcd/generators.hpp"
#include "halfgcd/ntt.hpp"

using namespace halfgcd;

namespace {

std::vector<std::uint64_t> direct_dft(const PrimeField& f, const PrimePoly& p, std::uint64_t n) {
  int lg = 0;
  while ((std::uint64_t{1} << lg) < n) ++lg;
  auto w = f.root_of_unity(lg);
  std::vector<std::uint64_t> out(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    std::uint64_t x = f.pow(w, j), acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
    out[j] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("transform equals evaluation at powers of the root") {
  PrimeField f(kDefaultPrime);
  TransformPlan plan(f);
  std::mt19937_64 rng(2);
  CostCounter cc;
  for (std::uint64_t n : {1, 2, 4, 8, 32, 128}) {
    for (std::int64_t deg : {std::int64_t{-1}, std::int64_t{0}, static_cast<std::int64_t>(n) / 2,
                             static_cast<std::int64_t>(n) - 1}) {
      PrimePoly p = random_poly(f, deg, rng);
      CHECK(dft(plan, p, n, cc) == direct_dft(f, p, n));
    }
  }
}

TEST_CASE("round trip and doubling") {
  PrimeField f(998244353);
  TransformPlan plan(f);
  std::mt19937_64 rng(3);
  CostCounter cc;
  for (std::uint64_t n = 2; n <= 512; n *= 2) {
    PrimePoly p = random_poly(f, static_cast<std::int64_t>(n) - 1, rng);
    CHECK(inverse_dft(plan, dft(plan, p, n, cc), cc) == p);
    PrimePoly small = random_poly(f, static_cast<std::int64_t>(n / 2) - 1, rng);
    CHECK(fft_double(plan, small, dft(plan, small, n / 2, cc), cc) == dft(plan, small, n, cc));
  }
}

TEST_CASE("transform errors") {
  PrimeField f(97);
  TransformPlan plan(f);
  CostCounter cc;
  PrimePoly p = from_ints(f, {1, 2, 3});
  CHECK(plan.supports(32));
  CHECK_FALSE(plan.supports(64));
  CHECK_FALSE(plan.supports(12));
  CHECK_THROWS_AS(dft(plan, p, 64, cc), UnsupportedLength);
  CHECK_THROWS_AS(dft(plan, p, 6, cc), UnsupportedLength);
  CHECK_THROWS_AS(dft(plan, p, 2, cc), LengthOverflow);
  CHECK_THROWS_AS(fft_double(plan, p, SpectrumVec(3), cc), LengthMismatch);
  CHECK_THROWS_AS(inverse_dft(plan, SpectrumVec(5), cc), UnsupportedLength);
}

TEST_CASE("transform cost calibration") {
  PrimeField f(kDefaultPrime);
  TransformPlan plan(f);
  std::mt19937_64 rng(4);
  for (std::uint64_t n : {2, 16, 1024}) {
    CostCounter cc;
    std::uint64_t lg = static_cast<std::uint64_t>(std::countr_zero(n));
    SpectrumVec s = dft(plan, random_poly(f, static_cast<std::int64_t>(std::min<std::uint64_t>(n, 4)) - 1, rng), n, cc);
    CHECK(cc.field_mults == n / 2 * lg);
    CHECK(cc.field_adds == n * lg);
    CHECK(cc.transforms[n].forward == 1);
    CHECK(cc.transform_weight() == n / 2 * lg);
    CostCounter ci;
    inverse_dft(plan, s, ci);
    CHECK(ci.field_mults == n / 2 * lg + n);
    CHECK(ci.transforms[n].inverse == 1);
  }
}

TEST_CASE("corrupted twiddles are detected by the round trip") {
  PrimeField f(kDefaultPrime);
  PlanOptions opt;
  opt.corrupt_twiddles = true;
  TransformPlan plan(f, opt);
  std::mt19937_64 rng(5);
  CostCounter cc;
  PrimePoly p = random_poly(f, 63, rng);
  CHECK_FALSE(inverse_dft(plan, dft(plan, p, 64, cc), cc) == p);
}

#include <doctest.h>

#include <random>

#include "halfgcd/generators.hpp"
#include "halfgcd/poly_arith.hpp"

using namespace halfgcd;

namespace {

// Coefficient i of P |x|_d R straight from the defining double sum.
PrimePoly direct_middle(const PrimeField& f, const PrimePoly& p, std::int64_t d, const PrimePoly& r, std::int64_t n) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n - d));
  for (std::int64_t i = 0; i < n - d; ++i) {
    std::uint64_t acc = 0;
    for (std::int64_t k = 0; k <= d; ++k) acc = f.add(acc, f.mul(p.coeff(k), r.coeff(d + i - k)));
    out[static_cast<std::size_t>(i)] = acc;
  }
  return PrimePoly(std::move(out));
}

}  // namespace

TEST_CASE("polynomial basics") {
  PrimeField f(kDefaultPrime);
  CostCounter cc;
  PrimePoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == kZeroDegree);
  CHECK(from_ints(f, {1, 2, 0, 0}).degree() == 1);
  PrimePoly p = from_ints(f, {1, 2, 3, 4});
  CHECK(slice(p, 1, 3) == from_ints(f, {2, 3}));
  CHECK(slice(p, -2, 2) == from_ints(f, {0, 0, 1, 2}));
  CHECK(slice(p, 2) == from_ints(f, {3, 4}));
  CHECK(slice(p, 7, 9).is_zero());
  CHECK(reverse(p, 5) == from_ints(f, {0, 4, 3, 2, 1}));
  CHECK(shift(p, 2) == from_ints(f, {0, 0, 1, 2, 3, 4}));
  CHECK(truncate(p, 2) == from_ints(f, {1, 2}));
  CHECK(fold(f, p, 2, cc) == std::vector<std::uint64_t>{4, 6});
  CHECK(evaluate(f, p, 2, cc) == 49);
  CHECK(monic(f, from_ints(f, {2, 4}), cc) == PrimePoly(std::vector<std::uint64_t>{(f.modulus() + 1) / 2, 1}));
  CHECK(sub(f, p, p, cc).is_zero());
}

TEST_CASE("all multiplication backends agree with schoolbook") {
  PrimeField f(kDefaultPrime);
  TransformPlan plan(f);
  std::mt19937_64 rng(6);
  CostCounter cc;
  for (int it = 0; it < 200; ++it) {
    std::int64_t a = std::uniform_int_distribution<std::int64_t>(-1, 300)(rng);
    std::int64_t b = std::uniform_int_distribution<std::int64_t>(-1, 300)(rng);
    PrimePoly p = random_poly(f, a, rng), q = random_poly(f, b, rng);
    PrimePoly ref = detail::schoolbook_mul(f, p, q, cc);
    CHECK(mul(f, p, q, MulBackend::karatsuba(4), cc) == ref);
    CHECK(mul(f, p, q, MulBackend::karatsuba(), cc) == ref);
    CHECK(mul(f, p, q, MulBackend::ntt(plan, 0), cc) == ref);
  }
}

TEST_CASE("karatsuba tripling law") {
  PrimeField f(kDefaultPrime);
  std::mt19937_64 rng(7);
  std::uint64_t prev = 0;
  for (std::int64_t n = 64; n <= 2048; n *= 2) {
    CostCounter cc;
    mul(f, random_poly(f, n - 1, rng), random_poly(f, n - 1, rng), MulBackend::karatsuba(), cc);
    if (prev != 0) {
      double r = static_cast<double>(cc.field_mults) / static_cast<double>(prev);
      CHECK(r == doctest::Approx(3.0).epsilon(0.001));
    }
    prev = cc.field_mults;
  }
}

TEST_CASE("middle product") {
  PrimeField f(kDefaultPrime);
  TransformPlan plan(f);
  std::mt19937_64 rng(8);
  CostCounter cc;
  for (int it = 0; it < 100; ++it) {
    std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 120)(rng);
    std::int64_t d = std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng);
    PrimePoly p = random_poly(f, d, rng), r = random_poly(f, n - 1, rng);
    PrimePoly ref = direct_middle(f, p, d, r, n);
    CHECK(middle_product(f, p, d, r, n, MulBackend::schoolbook(), cc) == ref);
    CHECK(middle_product(f, p, d, r, n, MulBackend::karatsuba(8), cc) == ref);
    CHECK(middle_product(f, p, d, r, n, MulBackend::ntt(plan, 0), cc) == ref);
  }
  PrimePoly p = from_ints(f, {1, 1});
  CHECK_THROWS_AS(middle_product(f, p, 2, p, 5, MulBackend{}, cc), DegreeMismatch);
  CHECK_THROWS_AS(middle_product(f, p, 1, from_ints(f, {1, 1, 1, 1}), 3, MulBackend{}, cc), LengthOverflow);
}

TEST_CASE("series inverse and division") {
  PrimeField f(kDefaultPrime);
  TransformPlan plan(f);
  std::mt19937_64 rng(9);
  CostCounter cc;
  for (std::int64_t m : {1, 2, 7, 64, 300}) {
    PrimePoly q = random_poly(f, 50, rng);
    if (q[0] == 0) continue;
    PrimePoly g = series_inv(f, q, m, MulBackend::ntt(plan), cc);
    CHECK(truncate(mul(f, q, g, cc), static_cast<std::size_t>(m)) == PrimePoly::constant(1));
  }
  CHECK_THROWS_AS(series_inv(f, from_ints(f, {0, 1}), 4, cc), NotInvertible);
  for (int it = 0; it < 100; ++it) {
    std::int64_t a = std::uniform_int_distribution<std::int64_t>(0, 400)(rng);
    std::int64_t b = std::uniform_int_distribution<std::int64_t>(0, 400)(rng);
    PrimePoly p = random_poly(f, a, rng), q = random_poly(f, b, rng);
    auto [quo, rem] = quo_rem(f, p, q, MulBackend::ntt(plan), cc);
    CHECK(add(f, mul(f, quo, q, cc), rem, cc) == p);
    CHECK(rem.degree() < q.degree());
    CHECK(quotient(f, p, q, MulBackend::ntt(plan), cc) == quo);
  }
  CHECK_THROWS_AS(quo_rem(f, from_ints(f, {1}), PrimePoly{}, cc), DivisionByZero);
}

TEST_CASE("division over the rationals") {
  RationalField q;
  std::mt19937_64 rng(10);
  CostCounter cc;
  for (int it = 0; it < 20; ++it) {
    auto a = random_rational_poly(q, 60, rng), b = random_rational_poly(q, 20, rng);
    auto [quo, rem] = quo_rem(q, a, b, cc);
    CHECK(add(q, mul(q, quo, b, cc), rem, cc) == a);
    CHECK(rem.degree() < b.degree());
  }
}

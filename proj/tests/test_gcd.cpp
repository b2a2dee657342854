#include <doctest.h>

#include <random>

#include "halfgcd/gcd.hpp"
#include "halfgcd/generators.hpp"

using namespace halfgcd;

namespace {

template <Field F>
bool divides(const F& f, const Poly<F>& g, const Poly<F>& p) {
  CostCounter cc;
  return quo_rem(f, p, g, cc).second.is_zero();
}

}  // namespace

TEST_CASE("small gcds") {
  PrimeField f(kDefaultPrime);
  CHECK(gcd(f, from_ints(f, {-1, 0, 1}), from_ints(f, {-1, 1})) == from_ints(f, {-1, 1}));
  CHECK(gcd(f, from_ints(f, {-1, 1}), from_ints(f, {-1, 0, 1})) == from_ints(f, {-1, 1}));
  CHECK(gcd(f, from_ints(f, {0, 3}), PrimePoly{}) == from_ints(f, {0, 1}));
  CHECK(gcd(f, PrimePoly{}, from_ints(f, {5})) == from_ints(f, {1}));
  CHECK(gcd(f, from_ints(f, {2, 2}), from_ints(f, {3, 3})) == from_ints(f, {1, 1}));
  CHECK(gcd(f, from_ints(f, {4}), from_ints(f, {7})) == from_ints(f, {1}));
  CHECK_THROWS_AS(gcd(f, PrimePoly{}, PrimePoly{}), Undefined);
  CHECK_THROWS_AS(xgcd(f, PrimePoly{}, PrimePoly{}), Undefined);
}

TEST_CASE("extended gcd identity over every algorithm") {
  PrimeField f(kDefaultPrime);
  TransformPlan plan(f);
  std::mt19937_64 rng(50);
  CostCounter cc;
  for (auto alg : {Algorithm::automatic, Algorithm::euclid_ref, Algorithm::normal_basic, Algorithm::normal_fft,
                   Algorithm::normal_any, Algorithm::general, Algorithm::general_fft}) {
    GcdConfig cfg;
    cfg.algorithm = alg;
    cfg.plan = &plan;
    for (int it = 0; it < 8; ++it) {
      std::int64_t da = std::uniform_int_distribution<std::int64_t>(-1, 150)(rng);
      std::int64_t db = std::uniform_int_distribution<std::int64_t>(-1, 150)(rng);
      std::int64_t dg = std::uniform_int_distribution<std::int64_t>(0, 10)(rng);
      if (da < 0 && db < 0) continue;
      PrimePoly g = random_poly(f, dg, rng);
      PrimePoly p = mul(f, random_poly(f, da, rng), g, cc), q = mul(f, random_poly(f, db, rng), g, cc);
      auto r = xgcd(f, p, q, cfg, cc);
      CHECK(add(f, mul(f, r.u, p, cc), mul(f, r.v, q, cc), cc) == r.g);
      CHECK(r.g.lead() == 1);
      if (!p.is_zero()) CHECK(divides(f, r.g, p));
      if (!q.is_zero()) CHECK(divides(f, r.g, q));
      CHECK(divides(f, g, r.g));
      CHECK(gcd(f, p, q, cfg, cc) == r.g);
      // The second row of the matrix annihilates (P, Q).
      CHECK(add(f, mul(f, r.matrix(1, 0), p, cc), mul(f, r.matrix(1, 1), q, cc), cc).is_zero());
    }
  }
}

TEST_CASE("gcd over the rationals") {
  RationalField qf;
  std::mt19937_64 rng(51);
  CostCounter cc;
  for (int it = 0; it < 10; ++it) {
    auto g = random_rational_poly(qf, 3, rng);
    auto p = mul(qf, random_rational_poly(qf, 8, rng), g, cc);
    auto q = mul(qf, random_rational_poly(qf, 8, rng), g, cc);
    auto r = xgcd(qf, p, q);
    CHECK(add(qf, mul(qf, r.u, p, cc), mul(qf, r.v, q, cc), cc) == r.g);
    CHECK(r.g.lead() == 1);
    CHECK(divides(qf, g, r.g));
    CHECK(divides(qf, r.g, p));
  }
}

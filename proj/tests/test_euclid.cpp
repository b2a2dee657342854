#include <doctest.h>

#include <random>

#include "halfgcd/generators.hpp"
#include "halfgcd/euclid.hpp"

using namespace halfgcd;

TEST_CASE("hand example: (x^3, x^2 + 1)") {
  PrimeField f(kDefaultPrime);
  CostCounter cc;
  auto s = remainder_sequence(f, from_ints(f, {0, 0, 0, 1}), from_ints(f, {1, 0, 1}), cc);
  REQUIRE(s.ell() == 4);
  CHECK(is_normal(s));
  CHECK(s.quotient(1) == from_ints(f, {0, 1}));
  CHECK(s.quotient(2) == from_ints(f, {0, -1}));
  CHECK(s.quotient(3) == from_ints(f, {0, -1}));
  CHECK(s.remainder(2) == from_ints(f, {0, -1}));
  CHECK(s.remainder(3) == from_ints(f, {1}));
  CHECK(s.gcd() == from_ints(f, {1}));
  CHECK(bezout_product(f, s, 1, 2, cc) == s.bezout(f, 1));
  CHECK(bezout_product(f, s, 2, 2, cc) == PrimeMat2::identity(f));
  CHECK_THROWS_AS(bezout_product(f, s, 0, 2, cc), IndexOutOfRange);
  CHECK_THROWS_AS(bezout_product(f, s, 2, 9, cc), IndexOutOfRange);
}

TEST_CASE("sequence preconditions") {
  PrimeField f(kDefaultPrime);
  CostCounter cc;
  CHECK_THROWS_AS(remainder_sequence(f, from_ints(f, {1, 1}), from_ints(f, {1, 1}), cc), PreconditionViolated);
  PrimePoly big = PrimePoly::monomial(1, static_cast<std::size_t>(kReferenceMaxDegree + 1));
  CHECK_THROWS_AS(remainder_sequence(f, big, from_ints(f, {1}), cc), PreconditionViolated);
}

TEST_CASE("Bezout products reproduce the remainders") {
  PrimeField f(kDefaultPrime);
  TransformPlan plan(f);
  std::mt19937_64 rng(30);
  CostCounter cc;
  for (int it = 0; it < 20; ++it) {
    auto [p, q] = planted_pair(plan, 60, rng, it % 4);
    auto s = remainder_sequence(f, p, q, cc);
    for (std::int64_t i = 1; i < s.ell(); ++i) {
      CHECK(add(f, mul(f, s.quotient(i), s.remainder(i), cc), s.remainder(i + 1), cc) == s.remainder(i - 1));
      PrimeMat2 b = bezout_product(f, s, 1, i + 1, cc);
      auto [r0, r1] = apply(f, b, p, q, MulBackend{}, cc);
      CHECK(r0 == s.remainder(i));
      CHECK(r1 == s.remainder(i + 1));
      // deg R_i = d - deg B_{1;i+1}, with the top degree in entry (2, 2).
      CHECK(b.degree() == s.d - s.remainder(i).degree());
      CHECK(b(1, 1).degree() == b.degree());
      CHECK(b(0, 0).degree() < b.degree());
      CHECK(b(0, 1).degree() < b.degree());
      CHECK(b(1, 0).degree() < b.degree());
    }
  }
}

TEST_CASE("starred re-indexation") {
  PrimeField f(kDefaultPrime);
  CostCounter cc;
  // x^4 + 1 = x^2 * x^2 + 1, then x^2 = x^2 * 1.
  auto s = remainder_sequence(f, from_ints(f, {1, 0, 0, 0, 1}), from_ints(f, {0, 0, 1}), cc);
  StarredSequence st = reindex(s);
  CHECK(st.kappa == std::vector<std::int64_t>{0, 2, 4, 5});
  CHECK(starred_remainder(s, st, 0) == s.remainder(0));
  CHECK(starred_remainder(s, st, 1) == s.remainder(1));
  CHECK(starred_remainder(s, st, 2) == s.remainder(1));
  CHECK(starred_remainder(s, st, 3) == s.remainder(2));
  CHECK(starred_factor(f, s, st, 1) == PrimeMat2::identity(f));
  CHECK(starred_factor(f, s, st, 2) == s.bezout(f, 1));
  CHECK(starred_product(f, s, st, 1, 2, cc) == PrimeMat2::identity(f));
  CHECK(starred_product(f, s, st, 1, 3, cc) == s.bezout(f, 1));
  CHECK(starred_product(f, s, st, 1, 5, cc) == mat_mul(f, s.bezout(f, 2), s.bezout(f, 1), MulBackend{}, cc));
  CHECK(reference_half_gcd(f, from_ints(f, {1, 0, 0, 0, 1}), from_ints(f, {0, 0, 1}), 3, cc) == s.bezout(f, 1));
}

TEST_CASE("truncated oracle sequences match complete ones") {
  PrimeField f(kDefaultPrime);
  TransformPlan plan(f);
  std::mt19937_64 rng(31);
  CostCounter cc;
  for (int it = 0; it < 30; ++it) {
    auto [p, q] = planted_pair(plan, 80, rng);
    auto full = remainder_sequence(f, p, q, cc);
    StarredSequence st = reindex(full);
    for (std::int64_t k : {1, 7, 40, 80}) {
      CHECK(reference_half_gcd(f, p, q, k, cc) == starred_product(f, full, st, 1, k + 1, cc));
    }
  }
}

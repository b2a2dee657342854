#include <doctest.h>

#include <random>

#include "halfgcd/field.hpp"

using namespace halfgcd;

namespace {

bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

const std::uint64_t kPrimes[] = {97, 998244353, kDefaultPrime, 4179340454199820289ULL};

}  // namespace

TEST_CASE("primality agrees with trial division") {
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK_MESSAGE(PrimeField::is_prime(n) == trial_division(n), n);
  CHECK(PrimeField::is_prime(kDefaultPrime));
  CHECK_FALSE(PrimeField::is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("field construction") {
  PrimeField f(kDefaultPrime);
  CHECK(f.two_adicity() == 30);
  CHECK(f.cofactor() == 3);
  CHECK_THROWS_AS(PrimeField(2), UnsupportedField);
  CHECK_THROWS_AS(PrimeField(91), UnsupportedField);
  CHECK_THROWS_AS(PrimeField(kDefaultPrime + 2), UnsupportedField);
}

TEST_CASE("roots of unity have exact order") {
  for (std::uint64_t p : kPrimes) {
    PrimeField f(p);
    CHECK((f.modulus() - 1) % (std::uint64_t{1} << f.two_adicity()) == 0);
    CHECK(((f.modulus() - 1) >> f.two_adicity()) % 2 == 1);
    for (int k = 1; k <= f.two_adicity(); ++k) {
      auto w = f.root_of_unity(k);
      CHECK(f.pow(w, std::uint64_t{1} << (k - 1)) == f.modulus() - 1);
      if (k > 1) CHECK(f.mul(w, w) == f.root_of_unity(k - 1));
    }
    CHECK(f.root_of_unity(0) == 1);
    CHECK_THROWS_AS(f.root_of_unity(f.two_adicity() + 1), UnsupportedLength);
  }
}

TEST_CASE("arithmetic matches 128-bit reference") {
  std::mt19937_64 rng(1);
  for (std::uint64_t p : kPrimes) {
    PrimeField f(p);
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    std::vector<std::uint64_t> vals = {0, 1, 2, p - 1, p - 2, p / 2};
    for (int i = 0; i < 2000; ++i) vals.push_back(dist(rng));
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
      std::uint64_t a = vals[i], b = vals[i + 1];
      unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
      REQUIRE(f.mul(a, b) == static_cast<std::uint64_t>(prod % p));
      REQUIRE(f.add(a, b) == static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % p));
      REQUIRE(f.add(f.sub(a, b), b) == a);
      REQUIRE(f.add(a, f.neg(a)) == 0);
      if (b != 0) REQUIRE(f.mul(f.div(a, b), b) == a);
    }
    CHECK(f.from_int(-1) == p - 1);
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);
  }
}

TEST_CASE("rational field") {
  RationalField q;
  CHECK(q.from_fraction(2, 4) == mpq_class(1, 2));
  CHECK(q.inv(mpq_class(-3, 7)) == mpq_class(-7, 3));
  CHECK_THROWS_AS(q.inv(mpq_class(0)), DivisionByZero);
  CHECK(q.is_zero(q.sub(q.from_int(5), mpq_class(10, 2))));
  CHECK(q.to_string(RationalField::normalize(mpq_class(-6, 4))) == "-3/2");
}

#include <doctest.h>

#include <random>
#include <sstream>

#include "halfgcd/generators.hpp"
#include "halfgcd/polyfile.hpp"

using namespace halfgcd;

namespace {

PolyFile parse(const std::string& s) {
  std::istringstream in(s);
  return parse_polyfile(in);
}

}  // namespace

TEST_CASE("parse prime-field files") {
  PolyFile f = parse("p=97\n1\n-1\n200\n\n0\n\n\n5\n");
  CHECK_FALSE(f.rational);
  CHECK(f.modulus == 97);
  REQUIRE(f.count() == 3);
  CHECK(f.prime[0].coeffs() == std::vector<std::uint64_t>{1, 96, 6});
  CHECK(f.prime[1].is_zero());
  CHECK(f.prime[2].coeffs() == std::vector<std::uint64_t>{5});
  CHECK(parse("p=97\n1\n0\n0\n").prime[0].degree() == 0);
}

TEST_CASE("parse rational files") {
  PolyFile f = parse("Q\n1/2\n-6/4\r\n3\n");
  REQUIRE(f.rational);
  REQUIRE(f.count() == 1);
  CHECK(f.rationals[0].coeffs() == std::vector<mpq_class>{mpq_class(1, 2), mpq_class(-3, 2), mpq_class(3)});
}

TEST_CASE("malformed files") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("F_7\n1\n"), ParseError);
  CHECK_THROWS_AS(parse("p=97\nabc\n"), ParseError);
  CHECK_THROWS_AS(parse("p=97\n1.5\n"), ParseError);
  CHECK_THROWS_AS(parse("Q\n1/0\n"), ParseError);
  CHECK_THROWS_AS(parse("Q\n1/-2\n"), ParseError);
  CHECK_THROWS_AS(parse("p=91\n1\n"), UnsupportedField);
  CHECK_THROWS_AS(parse("p=99999999999999999999999\n1\n"), UnsupportedField);
}

TEST_CASE("emit then parse is the identity") {
  PrimeField f(kDefaultPrime);
  std::mt19937_64 rng(60);
  PolyFile a;
  a.modulus = f.modulus();
  a.prime = {random_poly(f, 10, rng), PrimePoly{}, random_poly(f, 0, rng)};
  std::ostringstream out;
  write_polyfile(out, a);
  PolyFile b = parse(out.str());
  CHECK(b.prime == a.prime);

  RationalField qf;
  PolyFile c;
  c.rational = true;
  c.rationals = {random_rational_poly(qf, 6, rng), Poly<RationalField>{}};
  std::ostringstream out2;
  write_polyfile(out2, c);
  CHECK(parse(out2.str()).rationals == c.rationals);
}

#include <doctest.h>

#include <sstream>

#include "halfgcd/bench.hpp"
#include "halfgcd/errors.hpp"

using namespace halfgcd;

TEST_CASE("list parsing") {
  CHECK(parse_sizes("16..128") == std::vector<std::int64_t>{16, 32, 64, 128});
  CHECK(parse_sizes("8,32") == std::vector<std::int64_t>{8, 32});
  CHECK(parse_sizes(",").empty());
  CHECK(parse_seeds("3..5") == std::vector<std::uint64_t>{3, 4, 5});
  CHECK_THROWS_AS(parse_sizes("ten"), ParseError);
  CHECK(parse_algorithms("all").size() == 8);
  CHECK_THROWS_AS(parse_algorithms("hgcd-normal-fft,bogus"), ParseError);
}

TEST_CASE("bench output is deterministic and ordered") {
  BenchConfig cfg;
  cfg.algorithms = {"hgcd-general-fft", "hgcd-normal-fft", "ntt-mul"};
  cfg.sizes = {32, 8};
  cfg.seeds = {2, 1};
  cfg.exact_accounting = true;
  cfg.timing = false;
  auto rows = run_bench(cfg);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].algorithm == "hgcd-general-fft");
  CHECK(rows[0].k == 32);
  CHECK(rows[0].seed == 2);
  CHECK(rows[0].d == 64);
  std::ostringstream a, b;
  write_csv(a, rows);
  write_csv(b, run_bench(cfg));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("algorithm,k,d,seed,field_mults,", 0) == 0);
}

TEST_CASE("bench rejects bad sizes") {
  BenchConfig cfg;
  cfg.algorithms = {"hgcd-normal-fft"};
  cfg.seeds = {1};
  CHECK_THROWS_AS(run_bench(cfg), PreconditionViolated);
  cfg.sizes = {12};
  CHECK_THROWS_AS(run_bench(cfg), PreconditionViolated);
  cfg.sizes = {64};
  cfg.modulus = 97;
  CHECK_THROWS_AS(run_bench(cfg), UnsupportedLength);
}

TEST_CASE("reference cost grows quadratically") {
  BenchConfig cfg;
  cfg.algorithms = {"euclid-ref"};
  cfg.sizes = {256, 512};
  cfg.seeds = {1};
  cfg.timing = false;
  auto rows = run_bench(cfg);
  double r = static_cast<double>(rows[1].field_mults) / static_cast<double>(rows[0].field_mults);
  CHECK(r > 3.5);
  CHECK(r < 4.5);
}

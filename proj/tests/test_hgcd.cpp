#include <doctest.h>

#include <random>

#include "halfgcd/gcd.hpp"
#include "halfgcd/generators.hpp"

using namespace halfgcd;

namespace {

struct Env {
  PrimeField f{kDefaultPrime};
  TransformPlan plan{f};
};

Env& env() {
  static Env e;
  return e;
}

}  // namespace

TEST_CASE("all algorithms agree with the oracle on normal input") {
  auto& [f, plan] = env();
  std::mt19937_64 rng(40);
  for (std::int64_t d : {1, 2, 3, 9, 33, 150}) {
    for (std::int64_t th : {1, 3, 32}) {
      HgcdOptions opt;
      opt.threshold = th;
      HgcdOptions plain = opt;
      plain.middle_product = false;
      for (int it = 0; it < 4; ++it) {
        auto [p, q] = random_normal_pair(plan, d, rng);
        std::int64_t k = std::uniform_int_distribution<std::int64_t>(0, d)(rng);
        CostCounter cc;
        PrimeMat2 ref = reference_half_gcd(f, p, q, k, cc);
        CHECK(hgcd_normal_basic(f, p, q, k, opt, cc) == ref);
        CHECK(hgcd_normal_basic(f, p, q, k, plain, cc) == ref);
        CHECK(hgcd_normal_any(plan, p, q, k, opt, cc) == ref);
        CHECK(hgcd_general(f, p, q, k, opt, cc) == ref);
        CHECK(hgcd_general_fft(plan, p, q, k, opt, cc).matrix == ref);
        if (k >= 1) {
          std::int64_t kp = static_cast<std::int64_t>(std::bit_floor(static_cast<std::uint64_t>(k)));
          CHECK(hgcd_normal_fft(plan, p, q, kp, opt, cc).matrix == reference_half_gcd(f, p, q, kp, cc));
        }
      }
    }
  }
}

TEST_CASE("general algorithms agree with the oracle on planted input") {
  auto& [f, plan] = env();
  std::mt19937_64 rng(41);
  for (std::int64_t d : {1, 4, 20, 100, 300}) {
    for (std::int64_t th : {1, 32}) {
      HgcdOptions opt;
      opt.threshold = th;
      HgcdOptions plain = opt;
      plain.middle_product = false;
      for (int it = 0; it < 6; ++it) {
        auto [p, q] = planted_pair(plan, d, rng, it % 3);
        std::int64_t k = std::uniform_int_distribution<std::int64_t>(0, d)(rng);
        CostCounter cc;
        PrimeMat2 ref = reference_half_gcd(f, p, q, k, cc);
        CHECK(hgcd_general(f, p, q, k, opt, cc) == ref);
        CHECK(hgcd_general(f, p, q, k, plain, cc) == ref);
        CHECK(hgcd_general_fft(plan, p, q, k, opt, cc).matrix == ref);
        // A longer transform length than needed takes the doubling branch.
        CHECK(hgcd_general_fft(plan, p, q, k, opt, cc, 4 * detail::next_pow2(static_cast<std::uint64_t>(k))).matrix ==
              ref);
      }
    }
  }
}

TEST_CASE("normal-case algorithms reject abnormal input") {
  auto& [f, plan] = env();
  CostCounter cc;
  // (x^4 + 1, x^2) starts with a quotient of degree 2.
  PrimePoly p = from_ints(f, {1, 0, 0, 0, 1}), q = from_ints(f, {0, 0, 1});
  CHECK_THROWS_AS(hgcd_normal_basic(f, p, q, 2, HgcdOptions{}, cc), AbnormalSequence);
  CHECK_THROWS_AS(hgcd_normal_fft(plan, p, q, 2, HgcdOptions{}, cc), AbnormalSequence);
  CHECK_THROWS_AS(hgcd_normal_any(plan, p, q, 3, HgcdOptions{}, cc), AbnormalSequence);
  HgcdOptions leafless;
  leafless.threshold = 1;
  CHECK_THROWS_AS(hgcd_normal_fft(plan, p, q, 4, leafless, cc), AbnormalSequence);
}

TEST_CASE("half-gcd preconditions") {
  auto& [f, plan] = env();
  CostCounter cc;
  PrimePoly p = from_ints(f, {1, 2, 3, 4, 5}), q = from_ints(f, {1, 1, 1});
  CHECK_THROWS_AS(hgcd_general(f, p, q, 5, HgcdOptions{}, cc), PreconditionViolated);
  CHECK_THROWS_AS(hgcd_general(f, q, p, 1, HgcdOptions{}, cc), PreconditionViolated);
  CHECK_THROWS_AS(hgcd_normal_fft(plan, p, q, 3, HgcdOptions{}, cc), PreconditionViolated);
  CHECK_THROWS_AS(hgcd_general_fft(plan, p, q, 4, HgcdOptions{}, cc, 2), PreconditionViolated);
  PrimeField small(97);
  TransformPlan tiny(small);
  std::mt19937_64 rng(42);
  PrimePoly big = random_poly(small, 100, rng);
  CHECK_THROWS_AS(hgcd_general_fft(tiny, big, random_poly(small, 99, rng), 64, HgcdOptions{}, cc), UnsupportedLength);
}

TEST_CASE("returned spectra are the transforms of the returned matrices") {
  auto& [f, plan] = env();
  std::mt19937_64 rng(43);
  CostCounter cc;
  for (std::int64_t k : {1, 2, 8, 64}) {
    HgcdOptions opt;
    opt.threshold = 1;
    auto [p, q] = random_normal_pair(plan, 2 * k, rng);
    HalfGcdResult r = hgcd_normal_fft(plan, p, q, k, opt, cc);
    CHECK(r.spectrum == mat_dft_wrapped(plan, r.matrix, static_cast<std::uint64_t>(k), cc));
    auto [a, b] = planted_pair(plan, 3 * k, rng);
    for (std::uint64_t ell : {detail::next_pow2(static_cast<std::uint64_t>(k)), 2 * detail::next_pow2(static_cast<std::uint64_t>(k))}) {
      HalfGcdResult g = hgcd_general_fft(plan, a, b, k, opt, cc, ell);
      CHECK(g.spectrum == mat_dft_wrapped(plan, g.matrix, ell, cc));
    }
  }
}

TEST_CASE("transform accounting of the normal recursion") {
  auto& [f, plan] = env();
  std::mt19937_64 rng(44);
  HgcdOptions opt;
  opt.threshold = 1;
  for (std::int64_t k : {2, 16, 128}) {
    auto [p, q] = random_normal_pair(plan, 2 * k, rng);
    std::vector<NodeRecord> trace;
    CostCounter cc;
    cc.trace = &trace;
    hgcd_normal_fft(plan, p, q, k, opt, cc);
    std::size_t internal = 0;
    for (const auto& r : trace) {
      if (r.k < 2) continue;
      ++internal;
      auto n = static_cast<std::uint64_t>(r.k);
      REQUIRE(r.transforms.size() == 2);
      CHECK(r.transforms.at(n).total() == 12);
      CHECK(r.transforms.at(n).inverse == 8);
      CHECK(r.transforms.at(n / 2).total() == 8);
      CHECK(r.transforms.at(n / 2).doubling == 8);
    }
    CHECK(internal == static_cast<std::size_t>(k - 1));
  }
}

TEST_CASE("general recursion issues its own transforms at one length") {
  auto& [f, plan] = env();
  std::mt19937_64 rng(45);
  HgcdOptions opt;
  opt.threshold = 1;
  for (int planted = 0; planted < 2; ++planted) {
    std::int64_t k = 200;
    auto [p, q] = planted ? planted_pair(plan, 2 * k, rng) : random_normal_pair(plan, 2 * k, rng);
    std::vector<NodeRecord> trace;
    CostCounter cc;
    cc.trace = &trace;
    hgcd_general_fft(plan, p, q, k, opt, cc);
    bool degenerate = false;
    for (const auto& r : trace) {
      if (r.degeneracy != 0) degenerate = true;
      for (const auto& [len, t] : r.transforms) {
        TransformTally own = t;
        if (r.division_transforms.count(len)) {
          own.forward -= r.division_transforms.at(len).forward;
          own.inverse -= r.division_transforms.at(len).inverse;
        }
        if (own.total() == 0) continue;
        if (own.doubling == own.total()) {
          CHECK(len * 2 == r.length);
        } else {
          CHECK(own.doubling == 0);
          CHECK(len == r.length);
        }
      }
    }
    // Normal input never degenerates; planted input does.
    CHECK(degenerate == (planted == 1));
  }
}

TEST_CASE("structural invariants of the result") {
  auto& [f, plan] = env();
  std::mt19937_64 rng(46);
  CostCounter cc;
  for (int it = 0; it < 20; ++it) {
    std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, 200)(rng);
    auto [p, q] = planted_pair(plan, d, rng);
    std::int64_t k = std::uniform_int_distribution<std::int64_t>(1, d)(rng);
    PrimeMat2 m = hgcd_general_fft(plan, p, q, k, HgcdOptions{}, cc).matrix;
    PrimePoly det = determinant(f, m, MulBackend{}, cc);
    CHECK((det == PrimePoly::constant(1) || det == PrimePoly::constant(f.modulus() - 1)));
    CHECK(m.degree() <= k);
    auto [r0, r1] = apply(f, m, p, q, MulBackend{}, cc);
    CHECK(r0.degree() >= d - k);
    CHECK(r1.degree() < d - k);
  }
}

TEST_CASE("half_gcd dispatch and fallback") {
  auto& [f, plan] = env();
  std::mt19937_64 rng(47);
  CostCounter cc;
  auto [p, q] = planted_pair(plan, 120, rng);
  PrimeMat2 ref = reference_half_gcd(f, p, q, 60, cc);
  for (auto alg : {Algorithm::automatic, Algorithm::euclid_ref, Algorithm::normal_basic, Algorithm::normal_fft,
                   Algorithm::normal_any, Algorithm::general, Algorithm::general_fft}) {
    GcdConfig cfg;
    cfg.algorithm = alg;
    CHECK(half_gcd(f, p, q, 60, cfg, cc) == ref);
    cfg.plan = &plan;
    cfg.options.backend = MulBackend::ntt(plan);
    CHECK(half_gcd(f, p, q, 60, cfg, cc) == ref);
  }
  CHECK(parse_algorithm("general-fft") == Algorithm::general_fft);
  CHECK(algorithm_name(Algorithm::normal_any) == "normal-any");
  CHECK_THROWS_AS(parse_algorithm("fast"), ParseError);
}

TEST_CASE("rational field through the generic algorithms") {
  RationalField qf;
  std::mt19937_64 rng(48);
  CostCounter cc;
  for (int it = 0; it < 5; ++it) {
    auto p = random_rational_poly(qf, 12, rng), q = random_rational_poly(qf, 11, rng);
    for (std::int64_t k : {1, 4, 12}) {
      auto ref = reference_half_gcd(qf, p, q, k, cc);
      HgcdOptions opt;
      opt.threshold = 1;
      CHECK(hgcd_general(qf, p, q, k, opt, cc) == ref);
    }
  }
  GcdConfig cfg;
  cfg.algorithm = Algorithm::general_fft;
  auto p = random_rational_poly(qf, 5, rng), q = random_rational_poly(qf, 4, rng);
  CHECK_THROWS_AS(half_gcd(qf, p, q, 2, cfg, cc), UnsupportedField);
}

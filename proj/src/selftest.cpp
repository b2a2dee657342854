#include "halfgcd/selftest.hpp"

#include <functional>
#include <ostream>
#include <random>
#include <vector>

#include "halfgcd/gcd.hpp"
#include "halfgcd/generators.hpp"

namespace halfgcd {

namespace {

struct Failure {
  std::string what;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

struct Fixture {
  std::string tag;
  std::string name;
  std::function<void(const TransformPlan&)> run;
};

PrimePoly ints(const PrimeField& f, std::initializer_list<std::int64_t> c) { return from_ints(f, c); }

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  out.push_back({"field", "inverse", [](const TransformPlan& plan) {
                   const PrimeField& f = plan.field();
                   for (PrimeField::Elem a : {PrimeField::Elem{1}, PrimeField::Elem{2}, PrimeField::Elem{12345}, f.modulus() - 1}) {
                     expect(f.mul(a, f.inv(a)) == 1, "a * a^-1 != 1 for a = " + std::to_string(a));
                   }
                 }});
  out.push_back({"field", "root-order", [](const TransformPlan& plan) {
                   const PrimeField& f = plan.field();
                   for (int k = 1; k <= f.two_adicity(); ++k) {
                     auto w = f.root_of_unity(k);
                     expect(f.pow(w, std::uint64_t{1} << (k - 1)) == f.modulus() - 1,
                            "root of order 2^" + std::to_string(k) + " is not primitive");
                   }
                 }});
  out.push_back({"ntt", "round-trip", [](const TransformPlan& plan) {
                   std::mt19937_64 rng(11);
                   CostCounter cc;
                   for (std::uint64_t n : {2, 8, 64, 512}) {
                     PrimePoly p = random_poly(plan.field(), static_cast<std::int64_t>(n) - 1, rng);
                     expect(inverse_dft(plan, dft(plan, p, n, cc), cc) == p,
                            "inverse transform does not undo the forward one at n = " + std::to_string(n));
                   }
                 }});
  out.push_back({"ntt", "convolution", [](const TransformPlan& plan) {
                   std::mt19937_64 rng(12);
                   CostCounter cc;
                   const PrimeField& f = plan.field();
                   PrimePoly a = random_poly(f, 40, rng), b = random_poly(f, 57, rng);
                   expect(detail::ntt_mul(plan, a, b, cc) == detail::schoolbook_mul(f, a, b, cc),
                          "transform product differs from schoolbook");
                 }});
  out.push_back({"ntt", "evaluation", [](const TransformPlan& plan) {
                   const PrimeField& f = plan.field();
                   CostCounter cc;
                   PrimePoly p = ints(f, {3, 1, 4, 1, 5, 9, 2, 6});
                   SpectrumVec s = dft(plan, p, 8, cc);
                   auto w = f.root_of_unity(3);
                   for (std::uint64_t j = 0; j < 8; ++j) {
                     expect(s[j] == evaluate(f, p, f.pow(w, j), cc), "spectrum entry " + std::to_string(j) + " wrong");
                   }
                 }});
  out.push_back({"poly", "division", [](const TransformPlan& plan) {
                   const PrimeField& f = plan.field();
                   std::mt19937_64 rng(13);
                   CostCounter cc;
                   for (std::int64_t dq : {1, 5, 40}) {
                     PrimePoly a = random_poly(f, 100, rng), b = random_poly(f, dq, rng);
                     auto [q, r] = quo_rem(f, a, b, MulBackend::ntt(plan), cc);
                     expect(add(f, mul(f, q, b, cc), r, cc) == a && r.degree() < b.degree(),
                            "division identity fails for divisor degree " + std::to_string(dq));
                   }
                 }});
  out.push_back({"poly", "middle-product", [](const TransformPlan& plan) {
                   const PrimeField& f = plan.field();
                   std::mt19937_64 rng(14);
                   CostCounter cc;
                   PrimePoly p = random_poly(f, 20, rng), r = random_poly(f, 50, rng);
                   expect(middle_product(f, p, 20, r, 60, MulBackend::ntt(plan, 0), cc) ==
                              middle_product(f, p, 20, r, 60, MulBackend::schoolbook(), cc),
                          "transform middle product differs from the direct sum");
                 }});
  out.push_back({"mat2", "middle-product", [](const TransformPlan& plan) {
                   const PrimeField& f = plan.field();
                   std::mt19937_64 rng(15);
                   CostCounter cc;
                   PrimeMat2 m, rhs;
                   for (int i = 0; i < 4; ++i) {
                     m.e[static_cast<std::size_t>(i)] = random_poly(f, 16, rng);
                     rhs.e[static_cast<std::size_t>(i)] = random_poly(f, 40, rng);
                   }
                   expect(mat_middle_product_fft(plan, m, 16, rhs, 41, cc, nullptr) ==
                              mat_middle_product(f, m, 16, rhs, 41, MulBackend::schoolbook(), cc),
                          "matrix middle product via transforms differs from the direct one");
                 }});
  out.push_back({"euclid", "hand-example", [](const TransformPlan& plan) {
                   const PrimeField& f = plan.field();
                   CostCounter cc;
                   // x^3 = x (x^2 + 1) - x, x^2 + 1 = (-x)(-x) + 1, -x = (-x) 1
                   auto s = remainder_sequence(f, ints(f, {0, 0, 0, 1}), ints(f, {1, 0, 1}), cc);
                   expect(s.ell() == 4 && is_normal(s), "sequence of (x^3, x^2 + 1) should be normal of length 4");
                   expect(s.quotient(1) == ints(f, {0, 1}), "q_1 should be x");
                   expect(s.remainder(2) == ints(f, {0, -1}), "R_2 should be -x");
                   expect(s.remainder(3) == ints(f, {1}), "R_3 should be 1");
                 }});
  out.push_back({"euclid", "starred-abnormal", [](const TransformPlan& plan) {
                   const PrimeField& f = plan.field();
                   CostCounter cc;
                   // (x^4 + 1, x^2): R_2 = 1, so kappa = (0, 2, 4, 5).
                   auto s = remainder_sequence(f, ints(f, {1, 0, 0, 0, 1}), ints(f, {0, 0, 1}), cc);
                   StarredSequence st = reindex(s);
                   expect(st.kappa == std::vector<std::int64_t>{0, 2, 4, 5}, "wrong re-indexation");
                   expect(starred_product(f, s, st, 1, 3, cc) == s.bezout(f, 1), "B*_{1;3} should be B_1");
                   expect(starred_product(f, s, st, 1, 2, cc) == PrimeMat2::identity(f), "B*_{1;2} should be Id");
                 }});
  out.push_back({"hgcd", "oracle-normal", [](const TransformPlan& plan) {
                   const PrimeField& f = plan.field();
                   std::mt19937_64 rng(16);
                   for (std::int64_t d : {8, 40, 128}) {
                     auto [p, q] = random_normal_pair(plan, d, rng);
                     CostCounter cc;
                     for (std::int64_t k : {std::int64_t{1}, std::int64_t{5}, std::int64_t{8}, d / 2}) {
                       PrimeMat2 ref = reference_half_gcd(f, p, q, k, cc);
                       HgcdOptions opt;
                       opt.threshold = 2;
                       expect(hgcd_normal_basic(f, p, q, k, opt, cc) == ref, "normal-basic differs from the oracle");
                       expect(hgcd_normal_any(plan, p, q, k, opt, cc) == ref, "normal-any differs from the oracle");
                       if (std::has_single_bit(static_cast<std::uint64_t>(k))) {
                         expect(hgcd_normal_fft(plan, p, q, k, opt, cc).matrix == ref,
                                "normal-fft differs from the oracle");
                       }
                     }
                   }
                 }});
  out.push_back({"hgcd", "oracle-general", [](const TransformPlan& plan) {
                   const PrimeField& f = plan.field();
                   std::mt19937_64 rng(17);
                   for (std::int64_t d : {8, 40, 128}) {
                     auto [p, q] = planted_pair(plan, d, rng, 2);
                     CostCounter cc;
                     for (std::int64_t k : {std::int64_t{1}, std::int64_t{3}, std::int64_t{8}, d / 2, d}) {
                       PrimeMat2 ref = reference_half_gcd(f, p, q, k, cc);
                       HgcdOptions opt;
                       opt.threshold = 2;
                       expect(hgcd_general(f, p, q, k, opt, cc) == ref, "general differs from the oracle");
                       expect(hgcd_general_fft(plan, p, q, k, opt, cc).matrix == ref,
                              "general-fft differs from the oracle");
                     }
                   }
                 }});
  out.push_back({"hgcd", "transform-count", [](const TransformPlan& plan) {
                   std::mt19937_64 rng(18);
                   const std::int64_t k = 64;
                   auto [p, q] = random_normal_pair(plan, 2 * k, rng);
                   std::vector<NodeRecord> trace;
                   CostCounter cc;
                   cc.trace = &trace;
                   HgcdOptions opt;
                   opt.threshold = 1;
                   hgcd_normal_fft(plan, p, q, k, opt, cc);
                   for (const auto& r : trace) {
                     if (r.k < 2) continue;
                     auto len = static_cast<std::uint64_t>(r.k);
                     std::uint64_t full = r.transforms.count(len) ? r.transforms.at(len).total() : 0;
                     std::uint64_t half = r.transforms.count(len / 2) ? r.transforms.at(len / 2).total() : 0;
                     expect(full == 12 && half == 8 && r.transforms.size() == 2,
                            "node k = " + std::to_string(r.k) + " issued " + std::to_string(full) + " + " +
                                std::to_string(half) + " transforms");
                   }
                 }});
  out.push_back({"gcd", "xgcd-identity", [](const TransformPlan& plan) {
                   const PrimeField& f = plan.field();
                   std::mt19937_64 rng(19);
                   GcdConfig cfg;
                   cfg.plan = &plan;
                   CostCounter cc;
                   PrimePoly g = random_poly(f, 5, rng);
                   PrimePoly a = mul(f, random_poly(f, 90, rng), g, cc), b = mul(f, random_poly(f, 70, rng), g, cc);
                   auto r = xgcd(f, a, b, cfg, cc);
                   expect(add(f, mul(f, r.u, a, cc), mul(f, r.v, b, cc), cc) == r.g, "u P + v Q != g");
                   expect(r.g.lead() == 1, "gcd is not monic");
                   expect(quo_rem(f, r.g, g, cc).second.is_zero(), "planted factor does not divide the gcd");
                 }});
  out.push_back({"gcd", "small", [](const TransformPlan& plan) {
                   const PrimeField& f = plan.field();
                   GcdConfig cfg;
                   cfg.plan = &plan;
                   CostCounter cc;
                   expect(gcd(f, ints(f, {-1, 0, 1}), ints(f, {-1, 1}), cfg, cc) == ints(f, {-1, 1}),
                          "gcd(x^2 - 1, x - 1) should be x - 1");
                   expect(gcd(f, ints(f, {2, 4}), PrimePoly{}, cfg, cc) == monic(f, ints(f, {2, 4}), cc),
                          "gcd(P, 0) should be monic P");
                 }});
  return out;
}

}  // namespace

SelftestSummary run_selftest(const SelftestOptions& opt, std::ostream& out) {
  PlanOptions po;
  po.corrupt_twiddles = opt.corrupt_twiddles;
  TransformPlan plan(PrimeField(kDefaultPrime), po);
  SelftestSummary sum;
  for (const auto& fx : fixtures()) {
    if (!opt.filter.empty() && fx.tag.rfind(opt.filter, 0) != 0) continue;
    std::string id = fx.tag + "/" + fx.name;
    try {
      fx.run(plan);
      out << "ok   " << id << "\n";
      ++sum.passed;
    } catch (const Failure& e) {
      out << "FAIL " << id << ": " << e.what << "\n";
      ++sum.failed;
    } catch (const std::exception& e) {
      out << "FAIL " << id << ": exception: " << e.what() << "\n";
      ++sum.failed;
    }
  }
  out << sum.passed << " passed, " << sum.failed << " failed\n";
  return sum;
}

}  // namespace halfgcd

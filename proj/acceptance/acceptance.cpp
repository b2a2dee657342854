// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "halfgcd/gcd.hpp"
#include "halfgcd/generators.hpp"

using namespace halfgcd;

namespace {

// Pinned tolerances.
constexpr int kOracleInstances = 500;
constexpr int kXgcdInstances = 1000;
constexpr int kCommonFactorInstances = 200;
constexpr int kMiddleInstances = 1000;
constexpr int kTransformInstances = 200;
constexpr int kLemmaSequences = 200;
constexpr double kSlack = 1.35;
constexpr double kNormalConstant = 4.0 / 3.0;
constexpr double kGeneralConstant = 19.0 / 12.0;
constexpr double kKaratsubaLow = 2.9;
constexpr double kKaratsubaHigh = 3.1;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

struct Ctx {
  PrimeField f{kDefaultPrime};
  TransformPlan plan{f};
};

using Elem = PrimeField::Elem;

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Elem f_add_mul(const PrimeField& f, Elem acc, Elem a, Elem b) { return f.add(acc, f.mul(a, b)); }

// Independent schoolbook pieces, written out here rather than taken from
// the library.
PrimePoly naive_mul(const PrimeField& f, const PrimePoly& a, const PrimePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Elem> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  return PrimePoly(std::move(out));
}

PrimePoly naive_middle(const PrimeField& f, const PrimePoly& p, std::int64_t d, const PrimePoly& r, std::int64_t n) {
  std::vector<Elem> out(static_cast<std::size_t>(n - d));
  for (std::int64_t i = 0; i < n - d; ++i) {
    Elem acc = 0;
    for (std::int64_t k = 0; k <= d; ++k) acc = f.add(acc, f.mul(p.coeff(k), r.coeff(d + i - k)));
    out[static_cast<std::size_t>(i)] = acc;
  }
  return PrimePoly(std::move(out));
}

std::vector<Elem> naive_dft(const PrimeField& f, const PrimePoly& p, std::uint64_t n) {
  Elem w = f.root_of_unity(std::countr_zero(n));
  std::vector<Elem> out(n);
  Elem x = 1;
  for (std::uint64_t j = 0; j < n; ++j) {
    Elem acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
    out[j] = acc;
    x = f.mul(x, w);
  }
  return out;
}

// Oracle matrix B*_{1;k+1} from a complete remainder sequence, as a plain
// left-to-right product of the Bezout factors with kappa(i) <= k.
PrimeMat2 oracle_from(const PrimeField& f, const RemainderSequence<PrimeField>& s, const StarredSequence& st,
                      std::int64_t k) {
  CostCounter cc;
  return starred_product(f, s, st, 1, k + 1, cc, MulBackend::karatsuba());
}

// 1. General case against the starred oracle.
void general_oracle(Ctx& c, Outcome& out) {
  std::mt19937_64 rng(101);
  int checked = 0, bad = 0;
  for (std::int64_t d : {64, 256, 1024, 4096}) {
    for (int it = 0; it < kOracleInstances; ++it) {
      auto [p, q] = planted_pair(c.plan, d, rng, uniform(rng, 0, 3));
      std::int64_t k = uniform(rng, 1, d);
      CostCounter cc;
      PrimeMat2 ref = reference_half_gcd(c.f, p, q, k, cc, MulBackend::karatsuba());
      HgcdOptions opt;
      opt.threshold = it % 2 == 0 ? 1 : 32;
      opt.backend = MulBackend::ntt(c.plan);
      bool ok = hgcd_general(c.f, p, q, k, opt, cc) == ref;
      ok = ok && hgcd_general_fft(c.plan, p, q, k, opt, cc).matrix == ref;
      ++checked;
      if (!ok) {
        if (bad == 0) out.detail << " first mismatch d=" << d << " k=" << k << ";";
        ++bad;
      }
    }
  }
  out.pass = bad == 0;
  out.detail << " " << checked << " planted instances, " << bad << " mismatches";
}

// 2. Normal case against the oracle, inputs verified normal by the oracle.
void normal_oracle(Ctx& c, Outcome& out) {
  std::mt19937_64 rng(102);
  int checked = 0, bad = 0, abnormal = 0;
  for (std::int64_t d : {64, 256, 1024, 4096}) {
    for (int it = 0; it < kOracleInstances; ++it) {
      auto [p, q] = random_normal_pair(c.plan, d, rng);
      CostCounter cc;
      auto s = remainder_sequence(c.f, p, q, cc);
      if (!is_normal(s)) {
        ++abnormal;
        continue;
      }
      StarredSequence st = reindex(s);
      std::int64_t k = uniform(rng, 1, d);
      std::int64_t k2 = static_cast<std::int64_t>(std::bit_floor(static_cast<std::uint64_t>(k)));
      PrimeMat2 ref = oracle_from(c.f, s, st, k);
      PrimeMat2 ref2 = oracle_from(c.f, s, st, k2);
      HgcdOptions opt;
      opt.threshold = it % 2 == 0 ? 1 : 32;
      opt.backend = MulBackend::ntt(c.plan);
      HgcdOptions plain = opt;
      plain.middle_product = false;
      bool ok = hgcd_normal_basic(c.f, p, q, k, opt, cc) == ref;
      ok = ok && hgcd_normal_basic(c.f, p, q, k, plain, cc) == ref;
      ok = ok && hgcd_normal_any(c.plan, p, q, k, opt, cc) == ref;
      ok = ok && hgcd_normal_fft(c.plan, p, q, k2, opt, cc).matrix == ref2;
      ++checked;
      if (!ok) {
        if (bad == 0) out.detail << " first mismatch d=" << d << " k=" << k << ";";
        ++bad;
      }
    }
  }
  out.pass = bad == 0 && abnormal == 0;
  out.detail << " " << checked << " normal instances, " << bad << " mismatches, " << abnormal
             << " generator outputs not normal";
}

bool divides(const PrimeField& f, const PrimePoly& g, const PrimePoly& p) {
  CostCounter cc;
  return quo_rem(f, p, g, cc).second.is_zero();
}

// 3. Extended gcd identity.
void xgcd_identity(Ctx& c, Outcome& out) {
  std::mt19937_64 rng(103);
  GcdConfig cfg;
  cfg.plan = &c.plan;
  cfg.options.backend = MulBackend::ntt(c.plan);
  int bad = 0;
  for (int it = 0; it < kXgcdInstances; ++it) {
    std::int64_t dp = uniform(rng, 0, 4096), dq = uniform(rng, -1, dp);
    PrimePoly p, q;
    if (it % 2 == 0) {
      p = random_poly(c.f, dp, rng);
      q = random_poly(c.f, dq, rng);
    } else {
      std::tie(p, q) = planted_pair(c.plan, std::max<std::int64_t>(dp, 1), rng, uniform(rng, 0, 20));
    }
    cfg.algorithm = it % 4 == 3 ? Algorithm::general : Algorithm::automatic;
    CostCounter cc;
    auto r = xgcd(c.f, p, q, cfg, cc);
    PrimePoly lhs = add(c.f, mul(c.f, r.u, p, cfg.options.backend, cc), mul(c.f, r.v, q, cfg.options.backend, cc), cc);
    bool ok = lhs == r.g && r.g.lead() == 1 && divides(c.f, r.g, p) && (q.is_zero() || divides(c.f, r.g, q));
    if (!ok) ++bad;
  }
  int bad_common = 0;
  for (int it = 0; it < kCommonFactorInstances; ++it) {
    PrimePoly g = random_poly(c.f, uniform(rng, 0, 200), rng);
    PrimePoly a = random_poly(c.f, uniform(rng, 0, 1500), rng), b = random_poly(c.f, uniform(rng, 0, 1500), rng);
    CostCounter cc;
    PrimePoly h = gcd(c.f, mul(c.f, a, g, cfg.options.backend, cc), mul(c.f, b, g, cfg.options.backend, cc), cfg, cc);
    if (!divides(c.f, g, h)) ++bad_common;
  }
  out.pass = bad == 0 && bad_common == 0;
  out.detail << " " << kXgcdInstances << " pairs with " << bad << " failures; " << kCommonFactorInstances
             << " common-factor checks with " << bad_common << " failures";
}

// 4. Per-node transform counts of the normal recursion.
void transform_counts(Ctx& c, Outcome& out) {
  std::mt19937_64 rng(104);
  HgcdOptions opt;
  opt.threshold = 1;
  for (std::int64_t k : {64, 256, 1024}) {
    auto [p, q] = random_normal_pair(c.plan, 2 * k, rng);
    std::vector<NodeRecord> trace;
    CostCounter cc;
    cc.trace = &trace;
    hgcd_normal_fft(c.plan, p, q, k, opt, cc);
    int nodes = 0, wrong = 0;
    for (const auto& r : trace) {
      if (r.k < 2) continue;
      ++nodes;
      auto n = static_cast<std::uint64_t>(r.k);
      std::uint64_t full = r.transforms.count(n) ? r.transforms.at(n).total() : 0;
      std::uint64_t half = r.transforms.count(n / 2) ? r.transforms.at(n / 2).total() : 0;
      std::uint64_t all = 0;
      for (const auto& [len, t] : r.transforms) all += t.total();
      if (full != 12 || half != 8 || all != 20) ++wrong;
    }
    if (wrong != 0 || nodes != k - 1) out.pass = false;
    out.detail << " k=" << k << ": " << nodes << " internal nodes, " << wrong << " off;";
  }
}

std::uint64_t measured_product(Ctx& c, std::int64_t k, std::mt19937_64& rng) {
  CostCounter cc;
  detail::ntt_mul(c.plan, random_poly(c.f, k - 1, rng), random_poly(c.f, k - 1, rng), cc);
  return cc.field_mults;
}

// 5 and 6. Total multiplications against constant * M_meas(k) * log2 k.
void constant_bound(Ctx& c, Outcome& out, bool general) {
  std::mt19937_64 rng(general ? 106 : 105);
  HgcdOptions opt;
  opt.threshold = 1;
  double constant = general ? kGeneralConstant : kNormalConstant;
  double prev = INFINITY;
  for (std::int64_t k : {1 << 10, 1 << 12, 1 << 14}) {
    double lg = std::log2(static_cast<double>(k));
    auto m = static_cast<double>(measured_product(c, k, rng));
    CostCounter cc;
    if (general) {
      auto [p, q] = planted_pair(c.plan, 2 * k, rng);
      hgcd_general_fft(c.plan, p, q, k, opt, cc);
    } else {
      auto [p, q] = random_normal_pair(c.plan, 2 * k, rng);
      hgcd_normal_fft(c.plan, p, q, k, opt, cc);
    }
    double total = static_cast<double>(cc.field_mults);
    double bound = constant * m * lg * kSlack;
    double normalized = total / (static_cast<double>(k) * lg * lg);
    if (total > bound) out.pass = false;
    if (!general && normalized > prev) out.pass = false;
    prev = normalized;
    char buf[160];
    std::snprintf(buf, sizeof buf, " k=%lld: %.0f <= %.0f (ratio %.3f, normalized %.3f);", static_cast<long long>(k),
                  total, bound, total / bound, normalized);
    out.detail << buf;
  }
}

// 7. Middle product identities.
void middle_products(Ctx& c, Outcome& out) {
  std::mt19937_64 rng(107);
  int bad_a = 0, bad_b = 0, bad_c = 0;
  for (int it = 0; it < kMiddleInstances; ++it) {
    std::int64_t n = uniform(rng, 1, 256), d = uniform(rng, 0, n - 1);
    PrimePoly p = random_poly(c.f, d, rng), r = random_poly(c.f, uniform(rng, -1, n - 1), rng);
    CostCounter cc;
    PrimePoly direct = naive_middle(c.f, p, d, r, n);
    if (middle_product(c.f, p, d, r, n, MulBackend::schoolbook(), cc) != direct ||
        middle_product(c.f, p, d, r, n, MulBackend::ntt(c.plan, 0), cc) != direct) {
      ++bad_a;
    }
    PrimePoly q = random_poly(c.f, uniform(rng, -1, n - d - 1), rng);
    // The middle product is the transpose of multiplication by the reversal of P.
    PrimePoly pq = naive_mul(c.f, reverse(p, static_cast<std::size_t>(d + 1)), q);
    Elem lhs = 0, rhs = 0;
    for (std::int64_t i = 0; i < n - d; ++i) lhs = f_add_mul(c.f, lhs, direct.coeff(i), q.coeff(i));
    for (std::int64_t j = 0; j < n; ++j) rhs = f_add_mul(c.f, rhs, pq.coeff(j), r.coeff(j));
    if (lhs != rhs) ++bad_b;
    PrimeMat2 m, rm, ref;
    for (auto& e : m.e) e = random_poly(c.f, uniform(rng, -1, d), rng);
    m.e[3] = random_poly(c.f, d, rng);
    for (auto& e : rm.e) e = random_poly(c.f, uniform(rng, -1, n - 1), rng);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        ref(i, j) = add(c.f, naive_middle(c.f, m(i, 0), d, rm(0, j), n), naive_middle(c.f, m(i, 1), d, rm(1, j), n), cc);
      }
    }
    if (mat_middle_product(c.f, m, d, rm, n, MulBackend::karatsuba(4), cc) != ref ||
        mat_middle_product_fft(c.plan, m, d, rm, n, cc) != ref) {
      ++bad_c;
    }
  }
  out.pass = bad_a == 0 && bad_b == 0 && bad_c == 0;
  out.detail << " " << kMiddleInstances << " instances; direct vs transform " << bad_a << ", transpose pairing "
             << bad_b << ", matrix " << bad_c << " failures";
}

// 8. Transform correctness.
void transforms(Ctx& c, Outcome& out) {
  std::mt19937_64 rng(108);
  int bad_round = 0, bad_double = 0, bad_conv = 0;
  for (int it = 0; it < kTransformInstances; ++it) {
    std::uint64_t n = std::uint64_t{1} << uniform(rng, 1, 9);
    CostCounter cc;
    PrimePoly p = random_poly(c.f, uniform(rng, -1, static_cast<std::int64_t>(n) - 1), rng);
    SpectrumVec s = dft(c.plan, p, n, cc);
    if (s != naive_dft(c.f, p, n) || inverse_dft(c.plan, s, cc) != p) ++bad_round;
    PrimePoly h = random_poly(c.f, uniform(rng, -1, static_cast<std::int64_t>(n / 2) - 1), rng);
    if (fft_double(c.plan, h, dft(c.plan, h, n / 2, cc), cc) != naive_dft(c.f, h, n)) ++bad_double;
    PrimePoly a = random_poly(c.f, uniform(rng, -1, static_cast<std::int64_t>(n / 2) - 1), rng);
    SpectrumVec sa = dft(c.plan, a, n, cc), sh = dft(c.plan, h, n, cc);
    for (std::size_t i = 0; i < n; ++i) sa[i] = c.f.mul(sa[i], sh[i]);
    if (inverse_dft(c.plan, sa, cc) != naive_mul(c.f, a, h)) ++bad_conv;
  }
  out.pass = bad_round == 0 && bad_double == 0 && bad_conv == 0;
  out.detail << " " << kTransformInstances << " instances each; round trip " << bad_round << ", doubling "
             << bad_double << ", convolution " << bad_conv << " failures";
}

// 9. Structural invariants on oracle sequences.
void structure(Ctx& c, Outcome& out) {
  std::mt19937_64 rng(109);
  int bad_star = 0, bad_det = 0, sequences = 0;
  for (int it = 0; it < 40; ++it) {
    std::int64_t d = it < 8 ? 1024 : uniform(rng, 1, 1024);
    auto [p, q] = it % 2 == 0 ? planted_pair(c.plan, d, rng, uniform(rng, 0, 5)) : random_normal_pair(c.plan, d, rng);
    CostCounter cc;
    auto s = remainder_sequence(c.f, p, q, cc);
    StarredSequence st = reindex(s);
    ++sequences;
    // B*_{1;k+1} built incrementally by left multiplication with each factor.
    PrimeMat2 b = PrimeMat2::identity(c.f);
    std::set<std::int64_t> det_at = {0, d};
    for (int j = 0; j < 6; ++j) det_at.insert(uniform(rng, 0, d));
    for (std::int64_t k = 0; k <= d; ++k) {
      PrimeMat2 factor = starred_factor(c.f, s, st, k);
      if (!(factor == PrimeMat2::identity(c.f))) {
        b = detail::left_elementary(c.f, neg(c.f, factor(1, 1)), b, MulBackend::schoolbook(), cc);
      }
      const PrimePoly& rk = starred_remainder(s, st, k);
      if (!(rk.degree() <= d - k) || b.degree() > k) ++bad_star;
      if (det_at.count(k)) {
        PrimePoly det = determinant(c.f, b, MulBackend::ntt(c.plan), cc);
        if (det != PrimePoly::constant(1) && det != PrimePoly::constant(c.f.modulus() - 1)) ++bad_det;
      }
    }
    if (b != oracle_from(c.f, s, st, d)) ++bad_star;
  }
  int bad_lemma = 0;
  for (int it = 0; it < kLemmaSequences; ++it) {
    std::int64_t d = uniform(rng, 2, 160);
    auto [p, q] = it % 2 == 0 ? planted_pair(c.plan, d, rng, uniform(rng, 0, 3)) : random_normal_pair(c.plan, d, rng);
    CostCounter cc;
    auto s = remainder_sequence(c.f, p, q, cc);
    PrimeMat2 b = PrimeMat2::identity(c.f);
    for (std::int64_t i = 1; i < s.ell(); ++i) {
      if (s.bezout(c.f, i).degree() != s.remainder(i - 1).degree() - s.remainder(i).degree()) ++bad_lemma;
      b = mat_mul(c.f, s.bezout(c.f, i), b, MulBackend::karatsuba(), cc);
      if (b.degree() != d - s.remainder(i).degree()) ++bad_lemma;
      if (b(1, 1).degree() != b.degree() || b(0, 0).degree() >= b.degree() || b(0, 1).degree() >= b.degree() ||
          b(1, 0).degree() >= b.degree()) {
        ++bad_lemma;
      }
    }
    std::int64_t i = uniform(rng, 1, s.ell()), j = uniform(rng, i, s.ell());
    if (bezout_product(c.f, s, i, j, cc).degree() != (i == j ? 0 : s.remainder(i - 1).degree() - s.remainder(j - 1).degree())) {
      ++bad_lemma;
    }
  }
  out.pass = bad_star == 0 && bad_det == 0 && bad_lemma == 0;
  out.detail << " " << sequences << " oracle sequences up to d=1024: degree bounds " << bad_star << ", determinant "
             << bad_det << " failures; " << kLemmaSequences << " sequences for degree identities: " << bad_lemma
             << " failures";
}

// 10. Karatsuba count law.
void karatsuba(Ctx& c, Outcome& out) {
  std::mt19937_64 rng(110);
  auto count = [&](std::int64_t n) {
    CostCounter cc;
    mul(c.f, random_poly(c.f, n - 1, rng), random_poly(c.f, n - 1, rng), MulBackend::karatsuba(), cc);
    return static_cast<double>(cc.field_mults);
  };
  for (int j = 6; j <= 10; ++j) {
    std::int64_t d = std::int64_t{1} << j;
    double r = count(2 * d) / count(d);
    if (r < kKaratsubaLow || r > kKaratsubaHigh) out.pass = false;
    char buf[64];
    std::snprintf(buf, sizeof buf, " d=%lld: %.3f;", static_cast<long long>(d), r);
    out.detail << buf;
  }
  int bad = 0;
  for (int it = 0; it < 300; ++it) {
    PrimePoly a = random_poly(c.f, uniform(rng, -1, 1100), rng), b = random_poly(c.f, uniform(rng, -1, 1100), rng);
    CostCounter cc;
    if (mul(c.f, a, b, MulBackend::karatsuba(uniform(rng, 1, 40)), cc) != naive_mul(c.f, a, b)) ++bad;
  }
  if (bad != 0) out.pass = false;
  out.detail << " 300 products vs schoolbook: " << bad << " mismatches";
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));
  Ctx ctx;
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Ctx&, Outcome&)> run;
  };
  std::vector<Criterion> all = {
      {1, "general-case oracle equivalence", general_oracle},
      {2, "normal-case oracle equivalence", normal_oracle},
      {3, "extended gcd identity", xgcd_identity},
      {4, "per-node transform counts", transform_counts},
      {5, "normal transform-based constant bound", [](Ctx& c, Outcome& o) { constant_bound(c, o, false); }},
      {6, "general transform-based constant bound", [](Ctx& c, Outcome& o) { constant_bound(c, o, true); }},
      {7, "middle product identities", middle_products},
      {8, "transform correctness", transforms},
      {9, "structural invariants", structure},
      {10, "karatsuba count law", karatsuba},
  };
  int failed = 0;
  for (const auto& cr : all) {
    if (!only.empty() && !only.count(cr.id)) continue;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(ctx, o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s %d %s:%s [%.1fs]\n", o.pass ? "PASS" : "FAIL", cr.id, cr.name, o.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

#include "halfgcd/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "halfgcd/generators.hpp"
#include "halfgcd/hgcd.hpp"

namespace halfgcd {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::uint64_t parse_count(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("expected a non-negative integer, got '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw ParseError("integer out of range: '" + s + "'");
  }
}

bool is_normal_alg(const std::string& a) {
  return a.rfind("hgcd-normal", 0) == 0 || a == "euclid-ref" || a == "ntt-mul";
}

struct Instance {
  PrimePoly p, q;
};

Instance make_input(const TransformPlan& plan, std::int64_t k, std::uint64_t seed, bool normal) {
  std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                   static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(normal)};
  std::mt19937_64 rng(ss);
  auto [p, q] = normal ? random_normal_pair(plan, 2 * k, rng) : planted_pair(plan, 2 * k, rng);
  return {std::move(p), std::move(q)};
}

void run_one(const std::string& alg, const TransformPlan& plan, const Instance& in, std::int64_t k,
             const HgcdOptions& opt, CostCounter& cc) {
  const PrimeField& f = plan.field();
  HgcdOptions o = opt;
  o.backend = MulBackend::ntt(plan);
  if (alg == "hgcd-normal-basic") {
    o.middle_product = false;
    hgcd_normal_basic(f, in.p, in.q, k, o, cc);
  } else if (alg == "hgcd-normal-basic-mp") {
    hgcd_normal_basic(f, in.p, in.q, k, o, cc);
  } else if (alg == "hgcd-normal-fft") {
    hgcd_normal_fft(plan, in.p, in.q, k, o, cc);
  } else if (alg == "hgcd-normal-any") {
    hgcd_normal_any(plan, in.p, in.q, k, o, cc);
  } else if (alg == "hgcd-general") {
    hgcd_general(f, in.p, in.q, k, o, cc);
  } else if (alg == "hgcd-general-fft") {
    hgcd_general_fft(plan, in.p, in.q, k, o, cc);
  } else if (alg == "euclid-ref") {
    reference_half_gcd(f, in.p, in.q, k, cc, MulBackend::schoolbook());
  } else {
    detail::ntt_mul(plan, truncate(in.p, static_cast<std::size_t>(k)), truncate(in.q, static_cast<std::size_t>(k)), cc);
  }
}

}  // namespace

const std::vector<std::string>& bench_algorithms() {
  static const std::vector<std::string> names = {
      "hgcd-normal-basic", "hgcd-normal-basic-mp", "hgcd-normal-fft", "hgcd-normal-any",
      "hgcd-general",      "hgcd-general-fft",     "euclid-ref",      "ntt-mul",
  };
  return names;
}

std::vector<std::int64_t> parse_sizes(const std::string& spec) {
  std::vector<std::int64_t> out;
  std::size_t dots = spec.find("..");
  if (dots != std::string::npos) {
    std::uint64_t a = parse_count(spec.substr(0, dots)), b = parse_count(spec.substr(dots + 2));
    if (a == 0) throw ParseError("size range must start at 1 or more");
    for (std::uint64_t s = a; s <= b; s *= 2) out.push_back(static_cast<std::int64_t>(s));
    return out;
  }
  for (const auto& part : split(spec, ',')) out.push_back(static_cast<std::int64_t>(parse_count(part)));
  return out;
}

std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
  std::vector<std::uint64_t> out;
  std::size_t dots = spec.find("..");
  if (dots != std::string::npos) {
    std::uint64_t a = parse_count(spec.substr(0, dots)), b = parse_count(spec.substr(dots + 2));
    for (std::uint64_t s = a; s <= b; ++s) out.push_back(s);
    return out;
  }
  for (const auto& part : split(spec, ',')) out.push_back(parse_count(part));
  return out;
}

std::vector<std::string> parse_algorithms(const std::string& spec) {
  std::vector<std::string> out = split(spec, ',');
  if (out.size() == 1 && out[0] == "all") return bench_algorithms();
  const auto& known = bench_algorithms();
  for (const auto& a : out) {
    if (std::find(known.begin(), known.end(), a) == known.end()) throw ParseError("unknown algorithm '" + a + "'");
  }
  return out;
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  if (cfg.algorithms.empty()) throw PreconditionViolated("no algorithms given");
  if (cfg.sizes.empty()) throw PreconditionViolated("empty size list");
  if (cfg.seeds.empty()) throw PreconditionViolated("empty seed list");
  PrimeField f(cfg.modulus);
  TransformPlan plan(f);
  for (std::int64_t k : cfg.sizes) {
    if (k < 1 || !std::has_single_bit(static_cast<std::uint64_t>(k))) {
      throw PreconditionViolated("size " + std::to_string(k) + " is not a power of two");
    }
    // Products of degree-2k inputs need length 4k.
    if (!plan.supports(4 * static_cast<std::uint64_t>(k))) {
      throw UnsupportedLength("size " + std::to_string(k) + " exceeds the transform lengths of F_" +
                              std::to_string(cfg.modulus));
    }
  }
  HgcdOptions opt;
  if (cfg.threshold) opt.threshold = *cfg.threshold;
  if (cfg.exact_accounting) opt.threshold = 1;

  std::map<std::tuple<std::int64_t, std::uint64_t, bool>, Instance> inputs;
  std::vector<BenchRow> rows;
  for (const auto& alg : cfg.algorithms) {
    bool normal = cfg.input == BenchInput::automatic ? is_normal_alg(alg) : cfg.input == BenchInput::normal;
    for (std::int64_t k : cfg.sizes) {
      for (std::uint64_t seed : cfg.seeds) {
        auto key = std::make_tuple(k, seed, normal);
        auto it = inputs.find(key);
        if (it == inputs.end()) it = inputs.emplace(key, make_input(plan, k, seed, normal)).first;
        CostCounter cc;
        auto start = std::chrono::steady_clock::now();
        try {
          run_one(alg, plan, it->second, k, opt, cc);
        } catch (const AbnormalSequence&) {
          throw PreconditionViolated(alg + " needs normal input; use --input normal");
        }
        auto stop = std::chrono::steady_clock::now();
        BenchRow r;
        r.algorithm = alg;
        r.k = k;
        r.d = 2 * k;
        r.seed = seed;
        r.field_mults = cc.field_mults;
        r.field_adds = cc.field_adds;
        r.field_divs = cc.field_divs;
        r.transforms = cc.transform_count();
        r.transform_weight = cc.transform_weight();
        if (cfg.timing) {
          r.wall_time_ns = static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
        }
        if (k >= 2) {
          double lg = std::log2(static_cast<double>(k));
          r.normalized_constant = static_cast<double>(cc.field_mults) / (static_cast<double>(k) * lg * lg);
        }
        rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "algorithm,k,d,seed,field_mults,field_adds,field_divs,transforms,transform_weight,wall_time_ns,"
         "normalized_constant\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", r.normalized_constant);
    out << r.algorithm << ',' << r.k << ',' << r.d << ',' << r.seed << ',' << r.field_mults << ',' << r.field_adds
        << ',' << r.field_divs << ',' << r.transforms << ',' << r.transform_weight << ',' << r.wall_time_ns << ','
        << buf << '\n';
  }
}

}  // namespace halfgcd

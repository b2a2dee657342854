#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "halfgcd/bench.hpp"
#include "halfgcd/gcd.hpp"
#include "halfgcd/polyfile.hpp"
#include "halfgcd/selftest.hpp"

using namespace halfgcd;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kUnsupported = 3 };

void need_polys(const PolyFile& file, std::size_t n) {
  if (file.count() != n) {
    throw ParseError("expected " + std::to_string(n) + " polynomials, found " + std::to_string(file.count()));
  }
}

template <Field F>
PolyFile emit(const PolyFile& in, std::vector<Poly<F>> polys) {
  PolyFile out;
  out.rational = in.rational;
  out.modulus = in.modulus;
  if constexpr (std::is_same_v<F, PrimeField>) {
    out.prime = std::move(polys);
  } else {
    out.rationals = std::move(polys);
  }
  return out;
}

template <Field F>
PolyFile run_command(const std::string& cmd, const F& f, const PolyFile& in, const std::vector<Poly<F>>& polys,
                     Algorithm alg, std::int64_t k) {
  GcdConfig cfg;
  cfg.algorithm = alg;
  std::unique_ptr<TransformPlan> plan;
  if constexpr (std::is_same_v<F, PrimeField>) {
    plan = std::make_unique<TransformPlan>(f);
    cfg.plan = plan.get();
    cfg.options.backend = MulBackend::ntt(*plan);
  }
  CostCounter cc;
  if (cmd == "gcd") return emit<F>(in, {gcd(f, polys[0], polys[1], cfg, cc)});
  if (cmd == "xgcd") {
    auto r = xgcd(f, polys[0], polys[1], cfg, cc);
    return emit<F>(in, {r.g, r.u, r.v});
  }
  Mat2<F> m = half_gcd(f, polys[0], polys[1], k, cfg, cc);
  return emit<F>(in, {m(0, 0), m(0, 1), m(1, 0), m(1, 1)});
}

int poly_command(const std::string& cmd, const std::string& path, const std::string& alg_name, std::int64_t k) {
  PolyFile in = read_polyfile(path);
  need_polys(in, 2);
  Algorithm alg = parse_algorithm(alg_name);
  PolyFile out;
  if (in.rational) {
    out = run_command(cmd, RationalField{}, in, in.rationals, alg, k);
  } else {
    out = run_command(cmd, PrimeField(in.modulus), in, in.prime, alg, k);
  }
  write_polyfile(std::cout, out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial gcd, extended gcd and half-gcd over prime fields and the rationals"};
  app.require_subcommand(1);

  std::string file, alg = "auto";
  std::int64_t k = 0;
  auto* gcd_cmd = app.add_subcommand("gcd", "Monic gcd of the two polynomials in a file");
  gcd_cmd->add_option("file", file, "Input PolyFile")->required();
  gcd_cmd->add_option("--alg", alg, "auto, euclid-ref, normal-basic, normal-fft, normal-any, general, general-fft");
  auto* xgcd_cmd = app.add_subcommand("xgcd", "Monic gcd g with cofactors u, v such that u P + v Q = g");
  xgcd_cmd->add_option("file", file, "Input PolyFile")->required();
  xgcd_cmd->add_option("--alg", alg, "Half-gcd algorithm");
  auto* hgcd_cmd = app.add_subcommand("hgcd", "Half-gcd matrix B*_{1;k+1}, entries in row-major order");
  hgcd_cmd->add_option("file", file, "Input PolyFile")->required();
  hgcd_cmd->add_option("--k", k, "Number of degree steps")->required();
  hgcd_cmd->add_option("--alg", alg, "Half-gcd algorithm");

  std::string algs, sizes, seeds = "1", input = "auto";
  std::optional<std::int64_t> threshold;
  std::uint64_t modulus = kDefaultPrime;
  bool exact = false, no_timing = false;
  auto* bench_cmd = app.add_subcommand("bench", "Operation counts and timings as CSV");
  bench_cmd->add_option("--alg", algs, "Comma-separated algorithms, or 'all'")->required();
  bench_cmd->add_option("--sizes", sizes, "Sizes k as a,b,c or a..b (doubling)")->required();
  bench_cmd->add_option("--seeds", seeds, "Seeds as a,b,c or a..b");
  bench_cmd->add_option("--input", input, "auto, normal or general")->check(CLI::IsMember({"auto", "normal", "general"}));
  bench_cmd->add_option("--threshold", threshold, "Base-case threshold of the recursions");
  bench_cmd->add_option("--prime", modulus, "Field modulus");
  bench_cmd->add_flag("--exact-accounting", exact, "Force threshold 1");
  bench_cmd->add_flag("--no-timing", no_timing, "Write 0 in the wall_time_ns column");

  std::string filter;
  bool corrupt = false;
  auto* self_cmd = app.add_subcommand("selftest", "Run the built-in fixtures");
  self_cmd->add_option("--filter", filter, "Only fixtures with this tag (field, ntt, poly, mat2, euclid, hgcd, gcd)");
  self_cmd->add_flag("--corrupt-twiddles", corrupt, "Test hook: use a wrong twiddle table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gcd_cmd) return poly_command("gcd", file, alg, 0);
    if (*xgcd_cmd) return poly_command("xgcd", file, alg, 0);
    if (*hgcd_cmd) return poly_command("hgcd", file, alg, k);
    if (*bench_cmd) {
      BenchConfig cfg;
      cfg.algorithms = parse_algorithms(algs);
      cfg.sizes = parse_sizes(sizes);
      cfg.seeds = parse_seeds(seeds);
      cfg.input = input == "normal" ? BenchInput::normal : input == "general" ? BenchInput::general : BenchInput::automatic;
      cfg.threshold = threshold;
      cfg.exact_accounting = exact;
      cfg.timing = !no_timing;
      cfg.modulus = modulus;
      write_csv(std::cout, run_bench(cfg));
      return kOk;
    }
    SelftestOptions opt;
    opt.filter = filter;
    opt.corrupt_twiddles = corrupt;
    return run_selftest(opt, std::cout).failed == 0 ? kOk : kFailure;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedField& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const UnsupportedLength& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "halfgcd/bench.hpp"
#include "halfgcd/gcd.hpp"
#include "halfgcd/selftest.hpp"

namespace py = pybind11;
using namespace halfgcd;

namespace {

using Coeffs = std::vector<std::int64_t>;

PrimePoly to_poly(const PrimeField& f, const Coeffs& c) {
  std::vector<PrimeField::Elem> v;
  v.reserve(c.size());
  for (std::int64_t x : c) v.push_back(f.from_int(x));
  return PrimePoly(std::move(v));
}

std::vector<std::uint64_t> to_list(const PrimePoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

GcdConfig config(const std::string& alg) {
  GcdConfig cfg;
  cfg.algorithm = parse_algorithm(alg);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Polynomial gcd and half-gcd over prime fields";
  m.attr("DEFAULT_PRIME") = kDefaultPrime;

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UnsupportedField>(m, "UnsupportedField", base.ptr());
  py::register_exception<UnsupportedLength>(m, "UnsupportedLength", base.ptr());
  py::register_exception<PreconditionViolated>(m, "PreconditionViolated", base.ptr());
  py::register_exception<Undefined>(m, "Undefined", base.ptr());

  m.def(
      "gcd",
      [](const Coeffs& p, const Coeffs& q, std::uint64_t modulus, const std::string& alg) {
        PrimeField f(modulus);
        CostCounter cc;
        return to_list(gcd(f, to_poly(f, p), to_poly(f, q), config(alg), cc));
      },
      py::arg("p"), py::arg("q"), py::arg("modulus") = kDefaultPrime, py::arg("alg") = "auto",
      "Monic gcd; coefficients are listed from the constant term up.");

  m.def(
      "xgcd",
      [](const Coeffs& p, const Coeffs& q, std::uint64_t modulus, const std::string& alg) {
        PrimeField f(modulus);
        CostCounter cc;
        auto r = xgcd(f, to_poly(f, p), to_poly(f, q), config(alg), cc);
        return py::make_tuple(to_list(r.g), to_list(r.u), to_list(r.v));
      },
      py::arg("p"), py::arg("q"), py::arg("modulus") = kDefaultPrime, py::arg("alg") = "auto",
      "(g, u, v) with u p + v q = g and g monic.");

  m.def(
      "hgcd",
      [](const Coeffs& p, const Coeffs& q, std::int64_t k, std::uint64_t modulus, const std::string& alg) {
        PrimeField f(modulus);
        CostCounter cc;
        Mat2<PrimeField> h = half_gcd(f, to_poly(f, p), to_poly(f, q), k, config(alg), cc);
        return py::make_tuple(py::make_tuple(to_list(h(0, 0)), to_list(h(0, 1))),
                              py::make_tuple(to_list(h(1, 0)), to_list(h(1, 1))));
      },
      py::arg("p"), py::arg("q"), py::arg("k"), py::arg("modulus") = kDefaultPrime, py::arg("alg") = "auto",
      "Half-gcd matrix as ((m00, m01), (m10, m11)).");

  m.def(
      "bench",
      [](const std::string& algs, const std::string& sizes, const std::string& seeds, bool exact_accounting) {
        BenchConfig cfg;
        cfg.algorithms = parse_algorithms(algs);
        cfg.sizes = parse_sizes(sizes);
        cfg.seeds = parse_seeds(seeds);
        cfg.exact_accounting = exact_accounting;
        cfg.timing = false;
        py::list out;
        for (const BenchRow& r : run_bench(cfg)) {
          py::dict row;
          row["algorithm"] = r.algorithm;
          row["k"] = r.k;
          row["d"] = r.d;
          row["seed"] = r.seed;
          row["field_mults"] = r.field_mults;
          row["field_adds"] = r.field_adds;
          row["field_divs"] = r.field_divs;
          row["transforms"] = r.transforms;
          row["transform_weight"] = r.transform_weight;
          row["normalized_constant"] = r.normalized_constant;
          out.append(row);
        }
        return out;
      },
      py::arg("algorithms"), py::arg("sizes"), py::arg("seeds") = "1", py::arg("exact_accounting") = false,
      "Operation counts per (algorithm, size, seed), without timing.");

  m.def(
      "selftest",
      [](const std::string& filter) {
        SelftestOptions opt;
        opt.filter = filter;
        std::ostringstream log;
        SelftestSummary s = run_selftest(opt, log);
        return py::make_tuple(s.passed, s.failed);
      },
      py::arg("filter") = "", "(passed, failed) counts of the built-in fixtures.");
}

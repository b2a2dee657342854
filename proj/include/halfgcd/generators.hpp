#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "halfgcd/hgcd.hpp"

namespace halfgcd {

/// Uniform element of the field.
inline PrimeField::Elem random_elem(const PrimeField& f, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::uint64_t>(0, f.modulus() - 1)(rng);
}

inline PrimeField::Elem random_nonzero(const PrimeField& f, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::uint64_t>(1, f.modulus() - 1)(rng);
}

/// Random polynomial of exact degree `deg` (zero for deg < 0).
inline PrimePoly random_poly(const PrimeField& f, std::int64_t deg, std::mt19937_64& rng) {
  if (deg < 0) return {};
  std::vector<PrimeField::Elem> c(static_cast<std::size_t>(deg + 1));
  for (auto& x : c) x = random_elem(f, rng);
  c.back() = random_nonzero(f, rng);
  return PrimePoly(std::move(c));
}

/// Random polynomial with small signed integer coefficients, for the
/// rational field.
inline Poly<RationalField> random_rational_poly(const RationalField&, std::int64_t deg, std::mt19937_64& rng,
                                                int bound = 9) {
  if (deg < 0) return {};
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<mpq_class> c(static_cast<std::size_t>(deg + 1));
  for (auto& x : c) x = dist(rng);
  while (c.back() == 0) c.back() = dist(rng);
  return Poly<RationalField>(std::move(c));
}

/// Uniform (P, Q) with deg P = d, deg Q = d - 1 and every quotient of the
/// remainder sequence of degree one. Candidates are screened with the
/// transform-based normal half-gcd and redrawn when it reports an abnormal
/// quotient; draws are abnormal with probability about d / p.
std::pair<PrimePoly, PrimePoly> random_normal_pair(const TransformPlan& plan, std::int64_t d, std::mt19937_64& rng);

/// Degrees of the planted quotients: mostly 1, some 2 and 3, now and then a
/// large one of degree up to max(4, d/8). Sums to `total`.
std::vector<std::int64_t> planted_quotient_degrees(std::int64_t total, std::int64_t d, std::mt19937_64& rng);

/// (P, Q) with deg P = d whose remainder sequence has the given quotient
/// degrees and ends in a gcd of degree `gcd_degree`. Built as
/// C_1 ... C_n (G, 0)^T with C_i = [[q_i, 1], [1, 0]].
std::pair<PrimePoly, PrimePoly> planted_pair_with(const TransformPlan& plan, const std::vector<std::int64_t>& degrees,
                                                  std::int64_t gcd_degree, std::mt19937_64& rng);

/// Planted pair of degree d with abnormal quotients mixed in.
std::pair<PrimePoly, PrimePoly> planted_pair(const TransformPlan& plan, std::int64_t d, std::mt19937_64& rng,
                                             std::int64_t gcd_degree = 0);

}  // namespace halfgcd

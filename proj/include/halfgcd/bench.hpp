#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "halfgcd/field.hpp"

namespace halfgcd {

enum class BenchInput { automatic, normal, general };

struct BenchConfig {
  /// hgcd-normal-basic, hgcd-normal-basic-mp, hgcd-normal-fft,
  /// hgcd-normal-any, hgcd-general, hgcd-general-fft, euclid-ref, ntt-mul.
  std::vector<std::string> algorithms;
  /// Half-gcd sizes k; inputs have degree d = 2k.
  std::vector<std::int64_t> sizes;
  std::vector<std::uint64_t> seeds;
  /// automatic: normal inputs for the normal-case algorithms, the reference
  /// and ntt-mul; planted abnormal ones for the general-case algorithms.
  BenchInput input = BenchInput::automatic;
  std::optional<std::int64_t> threshold;
  /// Forces threshold = 1.
  bool exact_accounting = false;
  bool timing = true;
  std::uint64_t modulus = kDefaultPrime;
};

struct BenchRow {
  std::string algorithm;
  std::int64_t k = 0;
  std::int64_t d = 0;
  std::uint64_t seed = 0;
  std::uint64_t field_mults = 0;
  std::uint64_t field_adds = 0;
  std::uint64_t field_divs = 0;
  std::uint64_t transforms = 0;
  std::uint64_t transform_weight = 0;
  std::uint64_t wall_time_ns = 0;
  /// field_mults / (k log2^2 k); 0 for k < 2.
  double normalized_constant = 0;
};

const std::vector<std::string>& bench_algorithms();

/// "a,b,c" or "a..b"; for sizes the range form doubles from a up to b,
/// for seeds it counts up by one.
std::vector<std::int64_t> parse_sizes(const std::string& spec);
std::vector<std::uint64_t> parse_seeds(const std::string& spec);
std::vector<std::string> parse_algorithms(const std::string& spec);

/// Rows ordered by algorithm (as given), then size, then seed. Throws
/// PreconditionViolated on bad sizes and UnsupportedLength when a size
/// needs transforms the field does not have.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace halfgcd

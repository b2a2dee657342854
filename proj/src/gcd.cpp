#include "halfgcd/gcd.hpp"

namespace halfgcd {

namespace {

struct Named {
  Algorithm alg;
  const char* name;
};

constexpr Named kNames[] = {
    {Algorithm::automatic, "auto"},       {Algorithm::euclid_ref, "euclid-ref"},
    {Algorithm::normal_basic, "normal-basic"}, {Algorithm::normal_fft, "normal-fft"},
    {Algorithm::normal_any, "normal-any"}, {Algorithm::general, "general"},
    {Algorithm::general_fft, "general-fft"},
};

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
  for (const auto& n : kNames) {
    if (name == n.name) return n.alg;
  }
  throw ParseError("unknown algorithm '" + name + "'");
}

std::string algorithm_name(Algorithm a) {
  for (const auto& n : kNames) {
    if (n.alg == a) return n.name;
  }
  return "?";
}

}  // namespace halfgcd

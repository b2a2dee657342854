#pragma once

#include <iosfwd>
#include <string>

namespace halfgcd {

struct SelftestOptions {
  /// Runs only fixtures whose tag starts with this (field, ntt, poly, mat2,
  /// euclid, hgcd, gcd). Empty runs everything.
  std::string filter;
  /// Test hook: build the transform plan with a wrong twiddle table.
  bool corrupt_twiddles = false;
};

struct SelftestSummary {
  int passed = 0;
  int failed = 0;
};

/// One "ok" or "FAIL" line per fixture on `out`.
SelftestSummary run_selftest(const SelftestOptions& opt, std::ostream& out);

}  // namespace halfgcd

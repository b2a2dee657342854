#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "halfgcd/poly.hpp"
#include "halfgcd/ntt.hpp"

namespace halfgcd {

/// Text format: a field line ("p=<prime>" or "Q"), then one coefficient
/// per line from low to high degree, polynomials separated by blank lines.
/// The zero polynomial is written as a single "0".
struct PolyFile {
  bool rational = false;
  std::uint64_t modulus = 0;
  std::vector<PrimePoly> prime;
  std::vector<Poly<RationalField>> rationals;

  std::size_t count() const { return rational ? rationals.size() : prime.size(); }
};

/// Throws ParseError on malformed text and UnsupportedField when the
/// modulus is not a prime the library can use.
PolyFile parse_polyfile(std::istream& in);
PolyFile read_polyfile(const std::string& path);
void write_polyfile(std::ostream& out, const PolyFile& file);

}  // namespace halfgcd

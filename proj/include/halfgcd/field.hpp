#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "halfgcd/errors.hpp"

namespace halfgcd {

/// Capability shared by every coefficient field. Elements are plain values
/// in canonical form; `Elem{}` is the zero element.
template <class F>
concept Field = requires(const F& f, const typename F::Elem& a, std::int64_t n) {
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.from_int(n) } -> std::same_as<typename F::Elem>;
  { f.add(a, a) } -> std::same_as<typename F::Elem>;
  { f.sub(a, a) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.mul(a, a) } -> std::same_as<typename F::Elem>;
  { f.div(a, a) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.to_string(a) } -> std::same_as<std::string>;
};

/// F_p for an odd word-size prime p = s * 2^t + 1.
///
/// Primality and the two-adicity are established at construction by a
/// deterministic Miller-Rabin test; nothing is trusted from the caller.
/// Residues are stored canonically in [0, p).
class PrimeField {
 public:
  using Elem = std::uint64_t;

  /// Throws UnsupportedField unless `modulus` is an odd prime below 2^63.
  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return p_; }
  int two_adicity() const noexcept { return t_; }
  std::uint64_t cofactor() const noexcept { return s_; }
  Elem omega_max() const noexcept { return omega_max_; }

  /// Primitive 2^k-th root of unity, omega_max^(2^(t-k)), so that
  /// root_of_unity(k - 1) == root_of_unity(k)^2. Throws UnsupportedLength
  /// for k > t.
  Elem root_of_unity(int k) const;

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem from_int(std::int64_t v) const noexcept;
  Elem from_unsigned(std::uint64_t v) const noexcept { return v % p_; }

  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    if (small_) {
      // Barrett reduction; the estimate is short by at most one multiple.
      std::uint64_t x = a * b;
      std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
      std::uint64_t r = x - q * p_;
      return r >= p_ ? r - p_ : r;
    }
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const noexcept { return a == 0; }
  std::string to_string(Elem a) const { return std::to_string(a); }

  bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }

  static bool is_prime(std::uint64_t n) noexcept;

 private:
  std::uint64_t p_;
  int t_ = 0;
  std::uint64_t s_ = 0;
  Elem omega_max_ = 1;
  bool small_ = false;
  std::uint64_t barrett_ = 0;
};

/// The default prime 3 * 2^30 + 1.
inline constexpr std::uint64_t kDefaultPrime = 3221225473ULL;

/// Exact rationals backed by GMP. Used for hand-checkable fixtures and as
/// an oracle field at small degrees.
class RationalField {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t v) const { return Elem(static_cast<long>(v)); }
  Elem from_fraction(std::int64_t num, std::int64_t den) const;

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  std::string to_string(const Elem& a) const { return a.get_str(); }

  /// Reduces num/den to lowest terms with a positive denominator.
  static Elem normalize(Elem a);

  bool operator==(const RationalField&) const noexcept { return true; }
};

}  // namespace halfgcd

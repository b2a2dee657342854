#include "halfgcd/field.hpp"

#include <array>

namespace halfgcd {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool PrimeField::is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases are a deterministic witness set for every n < 3.3e24.
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (modulus < 3 || modulus >= (std::uint64_t{1} << 63) || !is_prime(modulus)) {
    throw UnsupportedField("modulus " + std::to_string(modulus) + " is not an odd prime below 2^63");
  }
  small_ = modulus < (std::uint64_t{1} << 32);
  barrett_ = ~std::uint64_t{0} / modulus;
  s_ = modulus - 1;
  while ((s_ & 1) == 0) {
    s_ >>= 1;
    ++t_;
  }
  // g^s has order exactly 2^t iff g is a quadratic non-residue; the
  // smallest such g is found quickly by trial.
  for (std::uint64_t g = 2; g < p_; ++g) {
    Elem w = pow(g, s_);
    Elem probe = w;
    for (int i = 1; i < t_; ++i) probe = mul(probe, probe);
    if (probe == p_ - 1) {
      omega_max_ = w;
      break;
    }
  }
}

PrimeField::Elem PrimeField::from_int(std::int64_t v) const noexcept {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
  std::uint64_t m = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p_;
  return neg(m);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1;
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
  std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(a);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  return s0 < 0 ? static_cast<Elem>(s0 + static_cast<std::int64_t>(p_)) : static_cast<Elem>(s0);
}

PrimeField::Elem PrimeField::root_of_unity(int k) const {
  if (k < 0 || k > t_) {
    throw UnsupportedLength("F_" + std::to_string(p_) + " has no primitive 2^" + std::to_string(k) +
                            "-th root of unity");
  }
  Elem w = omega_max_;
  for (int i = k; i < t_; ++i) w = mul(w, w);
  return w;
}

RationalField::Elem RationalField::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw DivisionByZero("zero denominator");
  return normalize(Elem(static_cast<long>(num), static_cast<long>(den)));
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) throw DivisionByZero("inverse of zero in Q");
  return Elem(1) / a;
}

RationalField::Elem RationalField::normalize(Elem a) {
  a.canonicalize();
  return a;
}

}  // namespace halfgcd

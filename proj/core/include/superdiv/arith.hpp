#pragma once

// Prime-field scalars and the p-adic combinatorics used throughout the
// library: Lucas binomials, multinomials, Legendre valuations and digit
// expansions.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace superdiv {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Largest modulus accepted; keeps products of two residues inside u64.
inline constexpr u64 kMaxModulus = (u64{1} << 31) - 1;

bool is_prime(u64 n);

/// Throws std::invalid_argument unless p is an odd prime not exceeding
/// kMaxModulus.
void require_odd_prime(u64 p);

/// A residue modulo an odd prime p. The modulus travels with the value so
/// mixing residues of different fields is detected.
class FpScalar {
 public:
  FpScalar(std::int64_t value, u32 p);

  static FpScalar zero(u32 p) { return FpScalar(0, p); }
  static FpScalar one(u32 p) { return FpScalar(1, p); }

  u32 value() const { return value_; }
  u32 modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  FpScalar operator+(FpScalar rhs) const;
  FpScalar operator-(FpScalar rhs) const;
  FpScalar operator*(FpScalar rhs) const;
  FpScalar operator/(FpScalar rhs) const;
  FpScalar operator-() const;
  FpScalar& operator+=(FpScalar rhs) { return *this = *this + rhs; }
  FpScalar& operator-=(FpScalar rhs) { return *this = *this - rhs; }
  FpScalar& operator*=(FpScalar rhs) { return *this = *this * rhs; }

  FpScalar pow(u64 exponent) const;
  /// Fermat inverse; throws std::domain_error on zero.
  FpScalar inv() const;

  friend bool operator==(FpScalar, FpScalar) = default;

 private:
  struct Raw {};
  FpScalar(Raw, u32 value, u32 p) : value_(value), p_(p) {}
  void check_same_field(FpScalar rhs) const;

  u32 value_;
  u32 p_;
};

std::ostream& operator<<(std::ostream& os, FpScalar s);

// Raw residue helpers for hot loops that keep the modulus out of band.
// All arguments must already lie in [0, p).
inline u32 add_mod(u32 a, u32 b, u32 p) {
  const u64 s = u64{a} + b;
  return static_cast<u32>(s >= p ? s - p : s);
}
inline u32 sub_mod(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 mul_mod(u32 a, u32 b, u32 p) {
  return static_cast<u32>((u64{a} * b) % p);
}
inline u32 neg_mod(u32 a, u32 p) { return a == 0 ? 0 : p - a; }
u32 pow_mod(u32 base, u64 exponent, u32 p);
u32 inv_mod(u32 a, u32 p);
/// Reduces a signed integer into [0, p).
u32 reduce_mod(std::int64_t v, u32 p);

/// Base-p digits of a nonnegative integer, least significant first.
struct PadicDigits {
  u64 base;
  std::vector<u64> digits;

  u64 value() const;
  /// Digit at position i, zero past the stored length.
  u64 digit(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
};

/// Digits of n in base p; n == 0 yields the single digit 0.
PadicDigits padic_digits(u64 n, u64 p);

/// C(a, b) mod p by Lucas' theorem. Zero when b > a or when some base-p
/// digit of b exceeds the matching digit of a.
FpScalar binom_mod_p(u64 a, u64 b, u32 p);

/// Raw-residue form of binom_mod_p.
u32 binom_residue(u64 a, u64 b, u32 p);

/// total! / (parts[0]! ... parts[k-1]!) mod p as a product of successive
/// Lucas binomials. Throws std::invalid_argument when the parts do not sum
/// to total.
FpScalar multinomial_mod_p(u64 total, std::span<const u64> parts, u32 p);

/// Legendre's formula: the exponent of p in n!.
u64 factorial_valuation(u64 n, u64 p);

/// True iff adding a and b in base p produces a carry (Kummer).
bool has_padic_carry(u64 a, u64 b, u64 p);

/// n! mod p. Zero for n >= p.
u32 factorial_residue(u64 n, u32 p);

}  // namespace superdiv

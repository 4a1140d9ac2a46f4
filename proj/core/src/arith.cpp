#include "superdiv/arith.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace superdiv {

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_odd_prime(u64 p) {
  if (p <= 2 || p > kMaxModulus || !is_prime(p)) {
    throw std::invalid_argument("modulus must be an odd prime, got " +
                                std::to_string(p));
  }
}

u32 reduce_mod(std::int64_t v, u32 p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<u32>(r);
}

u32 pow_mod(u32 base, u64 exponent, u32 p) {
  u32 result = 1 % p;
  u32 b = base % p;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, b, p);
    b = mul_mod(b, b, p);
    exponent >>= 1;
  }
  return result;
}

u32 inv_mod(u32 a, u32 p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
  return pow_mod(a, p - 2, p);
}

FpScalar::FpScalar(std::int64_t value, u32 p) : value_(0), p_(p) {
  // Primality is re-checked only when the modulus changes on this thread.
  thread_local u32 last_validated = 0;
  if (p != last_validated) {
    require_odd_prime(p);
    last_validated = p;
  }
  value_ = reduce_mod(value, p);
}

void FpScalar::check_same_field(FpScalar rhs) const {
  if (p_ != rhs.p_) {
    throw std::invalid_argument("FpScalar modulus mismatch: " +
                                std::to_string(p_) + " vs " +
                                std::to_string(rhs.p_));
  }
}

FpScalar FpScalar::operator+(FpScalar rhs) const {
  check_same_field(rhs);
  return {Raw{}, add_mod(value_, rhs.value_, p_), p_};
}

FpScalar FpScalar::operator-(FpScalar rhs) const {
  check_same_field(rhs);
  return {Raw{}, sub_mod(value_, rhs.value_, p_), p_};
}

FpScalar FpScalar::operator*(FpScalar rhs) const {
  check_same_field(rhs);
  return {Raw{}, mul_mod(value_, rhs.value_, p_), p_};
}

FpScalar FpScalar::operator/(FpScalar rhs) const {
  check_same_field(rhs);
  return *this * rhs.inv();
}

FpScalar FpScalar::operator-() const { return {Raw{}, neg_mod(value_, p_), p_}; }

FpScalar FpScalar::pow(u64 exponent) const {
  return {Raw{}, pow_mod(value_, exponent, p_), p_};
}

FpScalar FpScalar::inv() const { return {Raw{}, inv_mod(value_, p_), p_}; }

std::ostream& operator<<(std::ostream& os, FpScalar s) {
  return os << s.value();
}

u64 PadicDigits::value() const {
  u64 v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    v = v * base + *it;
  }
  return v;
}

PadicDigits padic_digits(u64 n, u64 p) {
  if (p < 2) throw std::invalid_argument("padic_digits: base must be >= 2");
  PadicDigits out{p, {}};
  do {
    out.digits.push_back(n % p);
    n /= p;
  } while (n > 0);
  return out;
}

namespace {

// Binomial of two base-p digits.
u32 small_binom(u64 a, u64 b, u32 p) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  u64 num = 1;
  u64 den = 1;
  for (u64 i = 0; i < b; ++i) {
    num = num * ((a - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return mul_mod(static_cast<u32>(num), inv_mod(static_cast<u32>(den), p), p);
}

}  // namespace

u32 binom_residue(u64 a, u64 b, u32 p) {
  if (b > a) return 0;
  u32 result = 1;
  while (b > 0) {
    const u64 ad = a % p;
    const u64 bd = b % p;
    if (bd > ad) return 0;
    result = mul_mod(result, small_binom(ad, bd, p), p);
    a /= p;
    b /= p;
  }
  return result;
}

FpScalar binom_mod_p(u64 a, u64 b, u32 p) {
  require_odd_prime(p);
  return FpScalar(binom_residue(a, b, p), p);
}

FpScalar multinomial_mod_p(u64 total, std::span<const u64> parts, u32 p) {
  require_odd_prime(p);
  u64 sum = 0;
  for (u64 part : parts) {
    if (part > std::numeric_limits<u64>::max() - sum) {
      throw std::overflow_error("multinomial_mod_p: parts overflow");
    }
    sum += part;
  }
  if (sum != total) {
    throw std::invalid_argument("multinomial_mod_p: parts sum to " +
                                std::to_string(sum) + ", expected " +
                                std::to_string(total));
  }
  u32 result = 1;
  u64 running = 0;
  for (u64 part : parts) {
    running += part;
    result = mul_mod(result, binom_residue(running, part, p), p);
    if (result == 0) break;
  }
  return FpScalar(result, p);
}

u64 factorial_valuation(u64 n, u64 p) {
  if (p < 2) throw std::invalid_argument("factorial_valuation: p must be >= 2");
  u64 v = 0;
  while (n > 0) {
    n /= p;
    v += n;
  }
  return v;
}

bool has_padic_carry(u64 a, u64 b, u64 p) {
  while (a > 0 && b > 0) {
    if (a % p + b % p >= p) return true;
    a /= p;
    b /= p;
  }
  return false;
}

u32 factorial_residue(u64 n, u32 p) {
  if (n >= p) return 0;
  u32 r = 1 % p;
  for (u64 i = 2; i <= n; ++i) r = mul_mod(r, static_cast<u32>(i), p);
  return r;
}

}  // namespace superdiv

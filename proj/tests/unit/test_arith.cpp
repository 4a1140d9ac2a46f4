#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "superdiv/arith.hpp"

using namespace superdiv;
using boost::multiprecision::cpp_int;

namespace {

cpp_int big_binom(u64 a, u64 b) {
  if (b > a) return 0;
  cpp_int r = 1;
  for (u64 i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

cpp_int big_factorial(u64 n) {
  cpp_int r = 1;
  for (u64 i = 2; i <= n; ++i) r *= i;
  return r;
}

u32 big_mod(const cpp_int& v, u32 p) { return static_cast<u32>(v % p); }

}  // namespace

TEST(Arith, PrimalityAgainstTrialDivision) {
  for (u64 n = 0; n < 2000; ++n) {
    bool trial = n >= 2;
    for (u64 d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    EXPECT_EQ(is_prime(n), trial) << n;
  }
}

TEST(Arith, RequireOddPrime) {
  EXPECT_NO_THROW(require_odd_prime(3));
  EXPECT_NO_THROW(require_odd_prime(7919));
  EXPECT_THROW(require_odd_prime(2), std::invalid_argument);
  EXPECT_THROW(require_odd_prime(9), std::invalid_argument);
  EXPECT_THROW(require_odd_prime(1), std::invalid_argument);
  EXPECT_THROW(FpScalar(1, 4), std::invalid_argument);
}

TEST(Arith, ScalarFieldAxioms) {
  std::mt19937_64 rng(11);
  for (u32 p : {3u, 5u, 7u, 101u}) {
    std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
    for (int it = 0; it < 200; ++it) {
      const FpScalar a(d(rng), p), b(d(rng), p), c(d(rng), p);
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_EQ(a - a, FpScalar::zero(p));
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inv(), FpScalar::one(p));
        EXPECT_EQ(a.pow(p - 1), FpScalar::one(p));
      }
    }
  }
  EXPECT_EQ(FpScalar(-1, 3).value(), 2u);
  EXPECT_THROW(FpScalar::zero(5).inv(), std::domain_error);
  EXPECT_THROW(FpScalar(1, 3) + FpScalar(1, 5), std::invalid_argument);
}

TEST(Arith, LucasBinomialMatchesBigIntegers) {
  for (u32 p : {3u, 5u, 7u}) {
    for (u64 a = 0; a <= 60; ++a) {
      for (u64 b = 0; b <= a + 2; ++b) {
        EXPECT_EQ(binom_residue(a, b, p), big_mod(big_binom(a, b), p)) << a << " " << b << " p=" << p;
      }
    }
  }
}

TEST(Arith, KummerCarryMeansVanishingBinomial) {
  for (u32 p : {3u, 5u}) {
    for (u64 a = 0; a < 40; ++a) {
      for (u64 b = 0; b < 40; ++b) {
        EXPECT_EQ(has_padic_carry(a, b, p), binom_residue(a + b, a, p) == 0) << a << " " << b;
      }
    }
  }
}

TEST(Arith, MultinomialMatchesBigIntegers) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<u64> part(0, 12);
  for (int it = 0; it < 300; ++it) {
    const u32 p = it % 2 ? 3 : 5;
    std::vector<u64> parts(1 + it % 4);
    u64 total = 0;
    cpp_int denom = 1;
    for (u64& x : parts) {
      x = part(rng);
      total += x;
      denom *= big_factorial(x);
    }
    EXPECT_EQ(multinomial_mod_p(total, parts, p).value(), big_mod(big_factorial(total) / denom, p));
  }
  const u64 bad[] = {1, 1};
  EXPECT_THROW(multinomial_mod_p(3, bad, 3), std::invalid_argument);
}

TEST(Arith, LegendreValuation) {
  for (u32 p : {3u, 5u}) {
    for (u64 n = 0; n <= 80; ++n) {
      cpp_int f = big_factorial(n);
      u64 v = 0;
      while (f % p == 0) {
        f /= p;
        ++v;
      }
      EXPECT_EQ(factorial_valuation(n, p), v);
      EXPECT_EQ(factorial_residue(n, p), big_mod(big_factorial(n), p));
    }
  }
}

TEST(Arith, PadicDigitsRoundTrip) {
  for (u64 n = 0; n < 500; ++n) {
    const PadicDigits d = padic_digits(n, 3);
    EXPECT_EQ(d.value(), n);
    for (u64 digit : d.digits) EXPECT_LT(digit, 3u);
  }
  EXPECT_EQ(padic_digits(0, 5).digits.size(), 1u);
  EXPECT_EQ(padic_digits(7, 3).digit(5), 0u);
}

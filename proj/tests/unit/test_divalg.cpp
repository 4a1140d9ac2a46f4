#include <gtest/gtest.h>

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>

#include "gen.hpp"
#include "superdiv/divalg.hpp"

using namespace superdiv;
using testgen::random_element;

namespace {

u32 big_binom_mod(u64 a, u64 b, u32 p) {
  boost::multiprecision::cpp_int r = 1;
  for (u64 i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return static_cast<u32>(r % p);
}

Monomial mono(std::vector<u32> xs, std::vector<u32> ys) { return Monomial(std::move(xs), std::move(ys)); }

}  // namespace

TEST(Divalg, ContextValidation) {
  EXPECT_NO_THROW(Context(3, 2, 1));
  EXPECT_THROW(Context(4, 1, 1), std::invalid_argument);
  EXPECT_THROW(Context(2, 1, 1), std::invalid_argument);
  EXPECT_THROW(Context(3, 0, 0), std::invalid_argument);
}

TEST(Divalg, RenderMonomials) {
  EXPECT_EQ(to_string(mono({2, 1}, {3})), "x1^(2)*x2*y1^(3)");
  EXPECT_EQ(to_string(mono({0, 0}, {0})), "1");
  EXPECT_EQ(to_string(mono({0}, {1, 2})), "y1*y2^(2)");
}

TEST(Divalg, SingleVariableProductIsBinomial) {
  const Context ctx(5, 1, 0);
  for (u32 a = 0; a < 30; ++a) {
    for (u32 b = 0; b < 30; ++b) {
      const Element prod = Element::monomial(ctx, mono({a}, {})) * Element::monomial(ctx, mono({b}, {}));
      EXPECT_EQ(prod.coefficient(mono({a + b}, {})).value(), big_binom_mod(a + b, a, 5));
      EXPECT_LE(prod.size(), 1u);
    }
  }
}

TEST(Divalg, CarryKillsProduct) {
  const Context ctx(3, 1, 1);
  const Element x = Element::monomial(ctx, mono({1}, {0}));
  const Element x2 = Element::monomial(ctx, mono({2}, {0}));
  EXPECT_TRUE((x * x2).is_zero());
  EXPECT_EQ((x * x).coefficient(mono({2}, {0})).value(), 2u);
}

TEST(Divalg, RingAxiomsProperty) {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 150; ++it) {
    const Context ctx(it % 2 ? 3 : 5, 1 + it % 2, 1 + (it / 2) % 2);
    const Element f = random_element(ctx, 4, 4, rng);
    const Element g = random_element(ctx, 4, 4, rng);
    const Element h = random_element(ctx, 4, 3, rng);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * Element::one(ctx), f);
    EXPECT_TRUE((f - f).is_zero());
  }
}

TEST(Divalg, DerivationsSatisfyLeibniz) {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 150; ++it) {
    const Context ctx(3, 2, 2);
    const Element f = random_element(ctx, 5, 4, rng);
    const Element g = random_element(ctx, 5, 4, rng);
    for (Variable v : {Variable::x(0), Variable::x(1), Variable::y(0), Variable::y(1)}) {
      EXPECT_EQ(derive(f * g, v), derive(f, v) * g + f * derive(g, v));
    }
  }
}

TEST(Divalg, CanonicalFormIsDecreasingWithoutZeros) {
  const Context ctx(3, 1, 1);
  const Element f(ctx, {{mono({0}, {2}), 1}, {mono({2}, {0}), 2}, {mono({0}, {2}), 2}, {mono({1}, {1}), 0}});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.terms()[0].monomial, mono({2}, {0}));
  std::mt19937_64 rng(8);
  for (int it = 0; it < 100; ++it) {
    const Element g = random_element(Context(5, 2, 1), 6, 8, rng);
    for (std::size_t i = 1; i < g.size(); ++i) {
      EXPECT_EQ(lex_compare(g.terms()[i - 1].monomial, g.terms()[i].monomial), std::strong_ordering::greater);
    }
    for (const Term& t : g.terms()) EXPECT_NE(t.coeff, 0u);
  }
}

TEST(Divalg, MulByX1MinusY1) {
  std::mt19937_64 rng(3);
  const Context ctx(5, 2, 1);
  const Element d = Element::monomial(ctx, mono({1, 0}, {0})) - Element::monomial(ctx, mono({0, 0}, {1}));
  for (int it = 0; it < 50; ++it) {
    const Element f = random_element(ctx, 4, 5, rng);
    EXPECT_EQ(mul_x1_minus_y1(f), d * f);
  }
}

TEST(Divalg, Homogeneity) {
  const Context ctx(3, 1, 1);
  const Element f(ctx, {{mono({2}, {0}), 1}, {mono({1}, {0}), 1}});
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_FALSE(f.degree().has_value());
  const auto comps = f.homogeneous_components();
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].degree(), 1u);
  EXPECT_EQ(comps[1].degree(), 2u);
}

TEST(Divalg, MonomialEnumeration) {
  for (const Context& ctx : {Context(3, 1, 1), Context(3, 2, 1), Context(3, 2, 2), Context(5, 3, 0)}) {
    for (u64 k = 0; k <= 7; ++k) {
      const auto all = monomials_of_degree(ctx, k);
      // stars and bars
      u64 expect = 1;
      for (u64 i = 1; i < ctx.nvars(); ++i) expect = expect * (k + i) / i;
      EXPECT_EQ(all.size(), expect);
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), std::greater<>()));
      std::set<Monomial> sym;
      for (const Monomial& m : all) sym.insert(symmetrize_monomial(m));
      const auto listed = symmetrized_monomials_of_degree(ctx, k);
      EXPECT_EQ(std::set<Monomial>(listed.begin(), listed.end()), sym);
      EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end(), std::greater<>()));
    }
  }
}

TEST(Divalg, OrbitSums) {
  const Context ctx(3, 3, 2);
  const u32 xs[] = {2, 1, 1}, ys[] = {3, 0};
  const Element f = orbit_sum(ctx, xs, ys);
  EXPECT_EQ(f.size(), 3u * 2u);
  for (const Term& t : f.terms()) EXPECT_EQ(t.coeff, 1u);
  EXPECT_EQ(leading_term(f).monomial, mono({2, 1, 1}, {3, 0}));
  EXPECT_EQ(swap_variables(f, VarKind::X, 0, 2), f);
  EXPECT_EQ(swap_variables(f, VarKind::Y, 0, 1), f);
  const u32 unsorted[] = {1, 2, 1};
  EXPECT_THROW(orbit_sum(ctx, unsorted, ys), std::invalid_argument);
}

TEST(Divalg, SwapIsInvolution) {
  std::mt19937_64 rng(4);
  const Context ctx(3, 2, 2);
  for (int it = 0; it < 50; ++it) {
    const Element f = random_element(ctx, 3, 5, rng);
    EXPECT_EQ(swap_variables(swap_variables(f, VarKind::X, 0, 1), VarKind::X, 0, 1), f);
  }
}

TEST(Divalg, SliceKeepsMatchingTerms) {
  const Context ctx(3, 2, 1);
  const Element f(ctx, {{mono({2, 1}, {0}), 1}, {mono({2, 0}, {1}), 2}, {mono({1, 1}, {1}), 1}});
  const FrozenExponent frozen[] = {{Variable::x(0), 2}};
  const Element s = slice_element(f, frozen);
  EXPECT_EQ(s.context(), Context(3, 1, 1));
  EXPECT_EQ(s, Element(Context(3, 1, 1), {{mono({1}, {0}), 1}, {mono({0}, {1}), 2}}));
}

TEST(Divalg, ElementarySymmetric) {
  const Context ctx(3, 3, 1);
  EXPECT_EQ(elementary_sigma(ctx, 2).size(), 3u);
  EXPECT_EQ(elementary_sigma(ctx, 0), Element::one(ctx));
  EXPECT_THROW(elementary_sigma(ctx, 4), std::invalid_argument);
}

TEST(Divalg, MinCompositionValuationBruteForce) {
  for (u32 p : {3u, 5u}) {
    for (u32 k = 0; k <= 20; ++k) {
      u64 best = ~u64{0};
      for (u32 a = 0; a <= k; ++a) {
        const u32 js[] = {a, k - a};
        best = std::min(best, factorial_product_valuation(js, p));
      }
      EXPECT_EQ(min_composition_valuation(2, k, p), best);
      EXPECT_EQ(min_composition_valuation(1, k, p), factorial_valuation(k, p));
    }
  }
}

TEST(Divalg, EOneIsFirstPowerSumDifference) {
  const Context ctx(3, 2, 2);
  const Element e1 = e_element(ctx, 1);
  const Element expect = orbit_sum(ctx, mono({1, 0}, {0, 0})) - orbit_sum(ctx, mono({0, 0}, {1, 0}));
  EXPECT_EQ(e1, expect);
  EXPECT_THROW(e_element(ctx, 0), std::invalid_argument);
  EXPECT_THROW(e_element(Context(3, 2, 0), 3), std::invalid_argument);
}

TEST(Divalg, ContextMismatchThrows) {
  const Element a = Element::one(Context(3, 1, 1));
  const Element b = Element::one(Context(3, 2, 1));
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(a * b, std::invalid_argument);
}

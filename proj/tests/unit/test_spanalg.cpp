#include <gtest/gtest.h>

#include "superdiv/spanalg.hpp"
#include "superdiv/supersym.hpp"

using namespace superdiv;

TEST(Spanalg, SingleLinearGeneratorLeavesGapAtTwo) {
  const Context ctx(3, 1, 1);
  const Element g = Element::monomial(ctx, Monomial({1}, {0})) - Element::monomial(ctx, Monomial({0}, {1}));
  const Element gens[] = {g};
  const SpanReport rep = span_check(ctx, gens, SpanTarget::SUPERSYM, 3);
  ASSERT_EQ(rep.degrees.size(), 4u);
  EXPECT_TRUE(rep.degrees[0].full());
  EXPECT_TRUE(rep.degrees[1].full());
  EXPECT_FALSE(rep.degrees[2].full());
  EXPECT_EQ(rep.gap_degrees().front(), 2u);
  EXPECT_FALSE(rep.complete());
  // (x - y)^2 = 2 (x^(2) - x y + y^(2)) lies inside S_2 but S_2 is larger.
  EXPECT_EQ(rep.degrees[2].achieved_dim, 1u);
  EXPECT_EQ(rep.degrees[2].target_dim, 2u);
  EXPECT_EQ(rep.degrees[2].outside, 0u);
}

TEST(Spanalg, FullBasisGeneratesEverything) {
  const Context ctx(3, 2, 1);
  std::vector<Element> gens;
  for (u64 k = 1; k <= 5; ++k) {
    for (const Element& e : basis_Sk(ctx, k).elements) gens.push_back(e);
  }
  EXPECT_TRUE(span_check(ctx, gens, SpanTarget::SUPERSYM, 5).complete());
}

TEST(Spanalg, NonSupersymmetricGeneratorCountsOutside) {
  const Context ctx(3, 1, 1);
  const Element gens[] = {Element::monomial(ctx, Monomial({0}, {1}))};
  const SpanReport rep = span_check(ctx, gens, SpanTarget::SUPERSYM, 1);
  EXPECT_EQ(rep.degrees[1].outside, 1u);
  EXPECT_FALSE(rep.degrees[1].full());
}

TEST(Spanalg, SymBasisCountsPartitions) {
  const u64 parts3[] = {1, 1, 2, 3, 4, 5, 7, 8, 10};
  for (u64 k = 0; k < 9; ++k) EXPECT_EQ(sym_basis(3, 3, k).size(), parts3[k]);
  EXPECT_THROW(sym_basis(3, 0, 1), std::invalid_argument);
}

TEST(Spanalg, RejectsInhomogeneousGenerators) {
  const Context ctx(3, 1, 1);
  const Element g = Element::monomial(ctx, Monomial({1}, {0})) + Element::monomial(ctx, Monomial({2}, {0}));
  const Element gens[] = {g};
  EXPECT_THROW(span_check(ctx, gens, SpanTarget::SUPERSYM, 2), std::invalid_argument);
}

TEST(Spanalg, SymTargetInPureXContext) {
  const Context ctx(3, 2, 0);
  std::vector<Element> gens;
  for (u64 k = 1; k <= 4; ++k) {
    for (const Element& e : sym_basis(ctx, k)) gens.push_back(e);
  }
  EXPECT_TRUE(span_check(ctx, gens, SpanTarget::SYM_X, 4).complete());
}

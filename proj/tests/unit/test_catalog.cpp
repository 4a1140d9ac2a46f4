#include <gtest/gtest.h>

#include "superdiv/catalog.hpp"
#include "superdiv/element_io.hpp"
#include "superdiv/supersym.hpp"

using namespace superdiv;

namespace {

FamilySpec spec(const std::string& text) { return parse_family_spec(text); }

bool builds(const std::string& text, u32 p = 3) {
  const FamilySpec s = spec(text);
  try {
    family_element(s, default_context(s, p));
    return true;
  } catch (const FamilyCheckError&) {
    return false;
  }
}

}  // namespace

TEST(Catalog, PairCExample) {
  const FamilySpec s = spec("PAIR_C:k=2");
  const Element f = family_element(s, default_context(s, 3));
  EXPECT_EQ(terms_to_text(f), "x1*y1 + y1^(2)");
}

TEST(Catalog, EExample) {
  const Element f = family_element(spec("E:t=2"), Context(3, 1, 1));
  EXPECT_EQ(terms_to_text(f), "2*x1*y1 + 2*y1^(2)");
}

TEST(Catalog, PreconditionViolations) {
  EXPECT_THROW(family_element(spec("JEDEN:i=3,1;j=0"), Context(3, 2, 1)), FamilyError);
  EXPECT_THROW(family_element(spec("PAIR_C:k=0"), Context(3, 1, 1)), FamilyError);
  EXPECT_THROW(family_element(spec("SEST:i=4,1;j=5,0"), Context(3, 2, 2)), FamilyError);
  EXPECT_THROW(family_element(spec("SEDEM:i=4,4;j=0,0"), Context(3, 2, 2)), FamilyError);
  EXPECT_THROW(family_element(spec("E:t=2"), Context(3, 1, 0)), FamilyError);
}

TEST(Catalog, SpecParsing) {
  for (const char* text : {"JEDEN:i=2,1;j=0", "E:t=4", "L63:j=1,1;variant=literal", "PAIR_C:k=5", "SEST:i=4,4;j=2,1"}) {
    EXPECT_EQ(to_string(spec(text)), text);
    EXPECT_EQ(spec(to_string(spec(text))), spec(text));
  }
  for (const char* bad : {"NOPE:k=1", "E", "E:t=", "E:t=x", "E:k=2", "E:t=1;t=2", "JEDEN:i=2,1", "JEDEN:i=2,1;j=0,0",
                          "L63:j=1", "E:t=2;variant=weird"}) {
    EXPECT_THROW(spec(bad), FamilyError) << bad;
  }
  EXPECT_EQ(family_from_name("SEDEM"), FamilyId::SEDEM);
  EXPECT_FALSE(family_from_name("sedem").has_value());
}

TEST(Catalog, HeightExamples) {
  const auto h = [](u32 a, u32 b, u32 p = 3) {
    const u32 js[] = {a, b};
    return height(js, p);
  };
  EXPECT_EQ(h(0, 0), HeightClass::One);
  EXPECT_EQ(h(1, 0), HeightClass::One);
  EXPECT_EQ(h(2, 0), HeightClass::One);
  EXPECT_EQ(h(2, 2), HeightClass::One);
  EXPECT_EQ(h(5, 4), HeightClass::One);
  EXPECT_EQ(h(1, 1), HeightClass::Greater);
  EXPECT_EQ(h(3, 0), HeightClass::Greater);
  EXPECT_EQ(h(4, 1), HeightClass::Greater);
  const u32 unsorted[] = {0, 1};
  EXPECT_THROW(height(unsorted, 3), std::invalid_argument);
}

TEST(Catalog, HeightShortcutDiffersOnlyAtOrigin) {
  for (u32 p : {3u, 5u}) {
    for (u32 j1 = 0; j1 <= 3 * p; ++j1) {
      for (u32 j2 = 0; j2 <= j1; ++j2) {
        const u32 js[] = {j1, j2};
        if (j1 == 0) {
          EXPECT_NE(height(js, p), height_n2_shortcut(j1, j2, p));
        } else {
          EXPECT_EQ(height(js, p), height_n2_shortcut(j1, j2, p)) << j1 << "," << j2 << " p=" << p;
        }
      }
    }
  }
}

TEST(Catalog, HeightOneNeedsNoLeadingX) {
  // Height one for (j1, j2) with j1 <= p-1 follows from a single x1 factor
  // generating x1*y^(j) in Div[x1, y1, y2].
  for (u32 j1 = 0; j1 <= 8; ++j1) {
    for (u32 j2 = 0; j2 <= j1; ++j2) {
      const u32 js[] = {j1, j2};
      const bool marked = marked_monomials(Context(3, 1, 2), 1 + j1 + j2).is_marked(Monomial({1}, {j1, j2}));
      EXPECT_EQ(marked, height(js, 3) == HeightClass::One) << j1 << "," << j2;
    }
  }
}

TEST(Catalog, EllReadings) {
  EXPECT_EQ(ell_factorial_reading(2, 3, 3), (std::vector<u32>{2, 1}));
  EXPECT_EQ(ell_multinomial_reading(2, 3, 3), (std::vector<u32>{3, 0}));
  EXPECT_EQ(ell_factorial_reading(2, 2, 3), (std::vector<u32>{2, 0}));
  EXPECT_EQ(ell_factorial_reading(1, 7, 3), (std::vector<u32>{7}));
}

TEST(Catalog, FamiliesPassOracleAcrossParameters) {
  for (u32 p : {3u, 5u}) {
    for (u32 k = 1; k <= 20; ++k) EXPECT_TRUE(builds("PAIR_C:k=" + std::to_string(k), p)) << k;
    for (u32 s = 1; s <= 2; ++s) EXPECT_TRUE(builds("PAIR_SIGMA:s=" + std::to_string(s), p));
    for (u32 k = 1; k <= 12; ++k) {
      for (u64 idx = 0; idx < expected_dim_11(k, p); ++idx) {
        EXPECT_TRUE(builds("KBASIS11:k=" + std::to_string(k) + ";idx=" + std::to_string(idx), p));
      }
    }
  }
  for (const Context& ctx : {Context(3, 2, 1), Context(3, 1, 2), Context(3, 2, 2)}) {
    for (u32 k = 1; k <= 2; ++k) {
      EXPECT_NO_THROW(family_element(spec("LEMMA_P:k=" + std::to_string(k)), ctx)) << to_string(ctx);
    }
    for (u32 t = 1; t <= 7; ++t) EXPECT_NO_THROW(family_element(spec("E:t=" + std::to_string(t)), ctx));
  }
  for (const char* s : {"JEDEN:i=2,1;j=0", "JEDEN:i=2,1;j=4", "JEDEN:i=4,2;j=1", "JEDEN:i=5,1;j=2", "JEDEN:i=1,1,1;j=1"}) {
    EXPECT_TRUE(builds(s)) << s;
  }
  for (u32 j1 = 0; j1 <= 8; ++j1) {
    for (u32 j2 = 0; j2 <= j1; ++j2) {
      const u32 js[] = {j1, j2};
      if (height(js, 3) != HeightClass::One) continue;
      EXPECT_TRUE(builds("L62:j=" + std::to_string(j1) + "," + std::to_string(j2))) << j1 << "," << j2;
    }
  }
  EXPECT_TRUE(builds("EVEN_D:a=3,2,1"));
  EXPECT_TRUE(builds("EVEN_D:a=9,9", 3));
}

TEST(Catalog, LeadingTermIsDeclared) {
  for (const char* text : {"E:t=5", "L62:j=5,4", "JEDEN:i=2,1;j=3", "SEST:i=4,4;j=2,1", "PAIR_SIGMA:s=2"}) {
    const FamilySpec s = spec(text);
    const Context ctx = default_context(s, 3);
    EXPECT_EQ(leading_term(family_element_unchecked(s, ctx)).monomial, declared_leading_monomial(s, ctx)) << text;
  }
}

TEST(Catalog, L63Variants) {
  for (const char* j : {"2,1", "3,0", "4,0", "3,1", "5,0"}) {
    EXPECT_TRUE(builds(std::string("L63:j=") + j)) << j;
    EXPECT_FALSE(builds(std::string("L63:j=") + j + ";variant=literal")) << j;
  }
  // Printed and corrected forms coincide when the third term vanishes.
  EXPECT_TRUE(builds("L63:j=1,1;variant=literal"));
  // Neither form survives these; the generator lists fall back to the echelon basis.
  EXPECT_FALSE(builds("L63:j=3,3"));
  EXPECT_FALSE(builds("L63:j=4,3"));
}

TEST(Catalog, SestVariants) {
  for (const char* text : {"SEST:i=4,4;j=2,0", "SEST:i=4,4;j=5,3", "SEST:i=7,4;j=5,0"}) {
    EXPECT_TRUE(builds(text)) << text;
    EXPECT_FALSE(builds(std::string(text) + ";variant=literal")) << text;
  }
  EXPECT_TRUE(builds("SEST:i=6,6;j=4,1", 5));
  EXPECT_FALSE(builds("SEST:i=6,6;j=4,1;variant=literal", 5));
  EXPECT_TRUE(builds("SEST:i=4,4;j=2,1;variant=literal"));
  EXPECT_TRUE(builds("SEST:i=4,4;j=5,5"));
}

TEST(Catalog, SedemVariants) {
  EXPECT_TRUE(builds("SEDEM:i=2,2;j=1,1"));
  EXPECT_TRUE(builds("SEDEM:i=2,2;j=2,0"));
  EXPECT_FALSE(builds("SEDEM:i=2,2;j=0,0"));
  EXPECT_FALSE(builds("SEDEM:i=5,2;j=0,0"));
}

TEST(Catalog, TheoremGeneratorListsAreOrderedAndMarked) {
  struct Case {
    TheoremCase c;
    u32 m;
    u64 bound;
  };
  for (const Case& cs : {Case{TheoremCase::M1, 2, 9}, Case{TheoremCase::ONE_TWO, 1, 10}, Case{TheoremCase::TWO_TWO, 2, 8}}) {
    const GeneratorList list = theorem_generators(cs.c, cs.m, cs.bound, 3);
    for (std::size_t i = 0; i < list.entries.size(); ++i) {
      const GeneratorEntry& e = list.entries[i];
      ASSERT_TRUE(e.element.has_value()) << to_string(e.marked);
      EXPECT_EQ(leading_term(*e.element).monomial, e.marked);
      EXPECT_TRUE(oracle_is_supersymmetric(*e.element).supersymmetric);
      if (i) EXPECT_LE(list.entries[i - 1].marked.degree(), e.marked.degree());
    }
  }
  EXPECT_EQ(theorem_generators(TheoremCase::ONE_TWO, 1, 10, 3).fallback_count(), 2u);
  EXPECT_EQ(theorem_generators(TheoremCase::M1, 2, 9, 3).fallback_count(), 0u);
}

TEST(Catalog, PairGenerators) {
  const GeneratorList list = pair_generators(9, 3);
  // PAIR_C for k = 1..9 and PAIR_SIGMA for 3 and 9.
  EXPECT_EQ(list.entries.size(), 11u);
  EXPECT_EQ(list.fallback_count(), 0u);
}

#include <gtest/gtest.h>

#include <random>

#include "gen.hpp"
#include "superdiv/element_io.hpp"
#include "superdiv/supersym.hpp"

using namespace superdiv;

TEST(ElementIo, JsonMatchesDocumentedShape) {
  const Context ctx(3, 2, 1);
  const Element f(ctx, {{Monomial({2, 1}, {0}), 1}, {Monomial({1, 2}, {0}), 1}});
  EXPECT_EQ(element_to_json(f),
            R"({"p":3,"m":2,"n":1,"terms":[{"x":[2,1],"y":[0],"c":1},{"x":[1,2],"y":[0],"c":1}]})");
}

TEST(ElementIo, TextMatchesGrammar) {
  const Context ctx(3, 1, 1);
  const Element f(ctx, {{Monomial({1}, {1}), 1}, {Monomial({0}, {2}), 2}});
  EXPECT_EQ(element_to_text(f), "p=3 m=1 n=1\nx1*y1 + 2*y1^(2)\n");
  EXPECT_EQ(terms_to_text(Element(ctx)), "0");
  EXPECT_EQ(terms_to_text(Element::one(ctx).scaled(2)), "2*1");
}

TEST(ElementIo, RoundTripBasisElements) {
  for (const Context& ctx : {Context(3, 1, 1), Context(3, 2, 1), Context(3, 1, 2), Context(3, 2, 2)}) {
    for (u64 k = 0; k <= 10; ++k) {
      for (const Element& e : basis_Sk(ctx, k).elements) {
        EXPECT_EQ(element_from_json(element_to_json(e)), e);
        EXPECT_EQ(element_from_text(element_to_text(e)), e);
      }
    }
  }
}

TEST(ElementIo, RoundTripRandomElements) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 200; ++it) {
    const Context ctx(it % 2 ? 3 : 7, 1 + it % 3, it % 4);
    const Element f = testgen::random_element(ctx, 12, 6, rng);
    EXPECT_EQ(element_from_json(element_to_json(f)), f);
    EXPECT_EQ(element_from_text(element_to_text(f)), f);
  }
}

TEST(ElementIo, JsonRejectsMalformedDocuments) {
  const char* bad[] = {
      "{",
      "[]",
      R"({"p":3,"m":1,"n":1})",
      R"({"p":4,"m":1,"n":1,"terms":[]})",
      R"({"p":3,"m":1,"n":1,"terms":[{"x":[1],"y":[0],"c":0}]})",
      R"({"p":3,"m":1,"n":1,"terms":[{"x":[1],"y":[0],"c":3}]})",
      R"({"p":3,"m":1,"n":1,"terms":[{"x":[1,0],"y":[0],"c":1}]})",
      R"({"p":3,"m":1,"n":1,"terms":[{"x":[0],"y":[1],"c":1},{"x":[1],"y":[0],"c":1}]})",
      R"({"p":3,"m":1,"n":1,"terms":[{"x":[1],"y":[0],"c":1},{"x":[1],"y":[0],"c":1}]})",
      R"({"p":3,"m":1,"n":1,"terms":[{"x":[-1],"y":[0],"c":1}]})",
  };
  for (const char* doc : bad) EXPECT_THROW(element_from_json(doc), ParseError) << doc;
}

TEST(ElementIo, TextRejectsMalformedInput) {
  const char* bad[] = {
      "",
      "p=3 m=1\nx1\n",
      "p=3 m=1 n=1\n",
      "p=3 m=1 n=1\nx2\n",
      "p=3 m=1 n=1\n3*x1\n",
      "p=3 m=1 n=1\nx1^2\n",
      "p=3 m=1 n=1\nx1 + \n",
      "p=3 m=1 n=1\nx1*x1\n",
      "p=3 m=1 n=1 q=2\nx1\n",
      "p=3 m=1 n=1\nx1\nmore\n",
  };
  for (const char* doc : bad) EXPECT_THROW(element_from_text(doc), ParseError) << doc;
}

TEST(ElementIo, TextAcceptsAnyTermOrder) {
  const Element f = element_from_text("p=5 m=1 n=1\ny1^(2) + 4*x1*y1\n");
  EXPECT_EQ(terms_to_text(f), "4*x1*y1 + y1^(2)");
}

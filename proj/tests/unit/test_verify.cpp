#include <gtest/gtest.h>

#include "superdiv/verify.hpp"

using namespace superdiv;

TEST(Verify, SuiteIdsAreOrdered) {
  const auto& ids = suite_ids();
  ASSERT_EQ(ids.size(), 11u);
  EXPECT_EQ(ids.front(), "kbasis11");
  EXPECT_EQ(ids.back(), "e-leading");
  EXPECT_FALSE(run_suite("nope").has_value());
}

TEST(Verify, CounterexampleSuitePasses) {
  const auto r = run_suite("counterexample-4-4");
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->passed) << r->detail;
  EXPECT_EQ(r->id, 8);
}

TEST(Verify, SeedDoesNotChangeVerdicts) {
  for (std::string_view id : {"kbasis11", "equivalence"}) {
    EXPECT_EQ(run_suite(id, 0)->passed, run_suite(id, 12345)->passed);
  }
}

TEST(Verify, ResultsAreDeterministic) {
  const auto a = run_suite("two-two-theorem");
  const auto b = run_suite("two-two-theorem");
  EXPECT_EQ(a->detail, b->detail);
  EXPECT_EQ(a->notes, b->notes);
}

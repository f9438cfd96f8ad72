#include <gtest/gtest.h>

#include "zdg/error.hpp"
#include "zdg/registry.hpp"

using namespace zdg;

TEST(Registry, PredicateAtoms) {
  const Ring z6 = build_ring(SquarefreeModulus{6});
  const Ring f35 = build_ring(PrimeFactors{{3, 5}});
  const Ring z30 = build_ring(SquarefreeModulus{30});
  EXPECT_TRUE(ring_matches("min_count == 2 && some_q == 2", z6));
  EXPECT_FALSE(ring_matches("min_count == 2 && some_q == 2", f35));
  EXPECT_TRUE(ring_matches("min_count == 2 && no_q == 2", f35));
  EXPECT_TRUE(ring_matches("min_count >= 3", z30));
  EXPECT_TRUE(ring_matches("some_q > 2", z6));
  EXPECT_FALSE(ring_matches("some_q > 5", z30));
  EXPECT_TRUE(ring_matches("min_count < 4 && min_count > 2 && no_q >= 7", z30));
  EXPECT_THROW(ring_matches("rank == 2", z6), Error);
  EXPECT_THROW(ring_matches("min_count == 2 || some_q == 2", z6), Error);
  EXPECT_THROW(ring_matches("min_count ==", z6), Error);
}

TEST(Registry, ShippedCasesParse) {
  const auto& cases = edge_cases();
  ASSERT_FALSE(cases.empty());
  const Ring z6 = build_ring(SquarefreeModulus{6});
  for (const auto& e : cases) {
    EXPECT_FALSE(e.note.empty());
    EXPECT_FALSE(e.source.empty());
    EXPECT_NO_THROW(ring_matches(e.when, z6)) << e.check;
  }
  EXPECT_TRUE(find_edge_case("radius.gamma", z6).has_value());
  EXPECT_FALSE(find_edge_case("radius.gamma", build_ring(PrimeFactors{{3, 5}})).has_value());
  EXPECT_TRUE(find_edge_case("radius.ag", build_ring(PrimeFactors{{3, 5}})).has_value());
  EXPECT_FALSE(find_edge_case("distance.gamma", z6).has_value());
}

TEST(Registry, MalformedDocument) {
  EXPECT_THROW(parse_edge_cases("{}"), Error);
  EXPECT_THROW(parse_edge_cases(R"({"edge_cases": [{"check": "x"}]})"), Error);
  EXPECT_EQ(parse_edge_cases(R"({"edge_cases": []})").size(), 0u);
}

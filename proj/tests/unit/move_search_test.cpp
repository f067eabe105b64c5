#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stellar/errors.hpp"
#include "stellar/move_search.hpp"
#include "stellar/random.hpp"
#include "stellar/subdivision.hpp"

namespace stellar {
namespace {

using oracle::parse;
using oracle::simplex;

TEST(Search, SingleEdgeSubdivision) {
  auto to = edge_subdivide(parse("12"), simplex("12"), Label::intern("v"));
  auto script = search_script(parse("12"), to);
  ASSERT_TRUE(script.has_value());
  ASSERT_EQ(script->moves.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<SubdivideMove>(script->moves[0]));
  EXPECT_TRUE(verify_script(parse("12"), *script, to));
}

TEST(Search, PathContractsToEdge) {
  auto to = SimplicialComplex::from_facets({{"a", "b"}});
  auto script = search_script(parse("12 23"), to);
  ASSERT_TRUE(script.has_value());
  ASSERT_EQ(script->moves.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<ContractMove>(script->moves[0]));
  EXPECT_TRUE(verify_script(parse("12 23"), *script, to));
}

TEST(Search, TriangleBoundaryToFourCycle) {
  // One subdivision already turns a 3-cycle into a 4-cycle.
  auto script = search_script(parse("12 23 13"), oracle::four_cycle());
  ASSERT_TRUE(script.has_value());
  EXPECT_EQ(script->moves.size(), 1u);
  EXPECT_TRUE(verify_script(parse("12 23 13"), *script, oracle::four_cycle()));
}

TEST(Search, SameComplexGivesEmptyScript) {
  auto c = oracle::tetrahedron_boundary();
  auto script = search_script(c, c, {0, 4});
  ASSERT_TRUE(script.has_value());
  EXPECT_TRUE(script->moves.empty());
}

TEST(Search, DerivedPathBackToEdge) {
  auto derived = derived_subdivision(parse("12 23")).first;
  auto script = search_script(derived, parse("13"));
  ASSERT_TRUE(script.has_value());
  EXPECT_EQ(script->moves.size(), 3u);
  EXPECT_TRUE(verify_script(derived, *script, parse("13")));
}

TEST(Search, DepthExhaustedReturnsNothing) {
  // A circle never becomes an interval.
  SearchLimits limits{3, 6};
  SearchStats stats;
  EXPECT_FALSE(search_script(parse("12 23 13"), parse("12"), limits, &stats).has_value());
  EXPECT_GT(stats.visited, 1u);
}

TEST(Search, BudgetsRaiseResourceLimit) {
  SearchLimits tight{4, 4};
  EXPECT_THROW(search_script(oracle::octahedron_boundary(), parse("12"), tight), ResourceLimit);
  SearchLimits few_states{6, 10, 3};
  EXPECT_THROW(search_script(parse("12 23 13"), parse("12"), few_states), ResourceLimit);
}

TEST(Verify, Examples) {
  MoveScript contract{{ContractMove{simplex("12"), std::nullopt}}, std::nullopt};
  EXPECT_TRUE(verify_script(parse("12"), contract, SimplicialComplex::from_facets({{"p"}})));
  try {
    verify_script(parse("12 23 13"), contract, parse("12"));
    FAIL() << "expected ScriptError";
  } catch (const ScriptError& e) {
    EXPECT_EQ(e.step(), 0u);
  }
}

TEST(Verify, ExactTargetMapIsChecked) {
  MoveScript script{{ContractMove{simplex("12"), Label::intern("1")}},
                    LabelMap{{Label::intern("1"), Label::intern("x")},
                             {Label::intern("3"), Label::intern("y")}}};
  auto to = SimplicialComplex::from_facets({{"x", "y"}});
  EXPECT_TRUE(verify_script(parse("12 23"), script, to));
  script.target_map->at(Label::intern("3")) = Label::intern("z");
  EXPECT_FALSE(verify_script(parse("12 23"), script, to));
}

class RandomSearch : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomSearch, SubdivisionFoundAtDepthOne) {
  auto c = random_complex({5, 2, 0.5, GetParam()});
  auto e = oracle::pick_edge(c, GetParam());
  if (!e) GTEST_SKIP() << "no edge";
  auto to = edge_subdivide(c, *e, Label::intern("v"));
  auto script = search_script(c, to, {1, 8});
  ASSERT_TRUE(script.has_value());
  EXPECT_EQ(script->moves.size(), 1u);
  EXPECT_TRUE(verify_script(c, *script, to));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomSearch, ::testing::Range<std::uint64_t>(0, 30));

}  // namespace
}  // namespace stellar

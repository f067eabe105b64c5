#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stellar/errors.hpp"
#include "stellar/inducedness.hpp"
#include "stellar/pair_engine.hpp"
#include "stellar/random.hpp"
#include "stellar/subdivision.hpp"

namespace stellar {
namespace {

using oracle::parse;
using oracle::simplex;

TEST(MissingSimplices, Examples) {
  EXPECT_EQ(missing_simplices(parse("12 23 13")), std::vector<Simplex>{simplex("123")});
  EXPECT_EQ(missing_simplices(oracle::four_cycle()),
            (std::vector<Simplex>{simplex("13"), simplex("24")}));
  EXPECT_TRUE(missing_simplices(parse("123")).empty());
  EXPECT_TRUE(missing_simplices(SimplicialComplex()).empty());
}

TEST(MissingSimplices, MaxDimBound) {
  auto hollow_tet = oracle::tetrahedron_boundary();
  EXPECT_EQ(missing_simplices(hollow_tet), std::vector<Simplex>{simplex("1234")});
  EXPECT_TRUE(missing_simplices(hollow_tet, 2).empty());
  auto both = parse("12 23 13 4");
  EXPECT_EQ(missing_simplices(both, 1),
            (std::vector<Simplex>{simplex("14"), simplex("24"), simplex("34")}));
}

TEST(Induced, FourCycleWithChord) {
  auto w = is_induced(oracle::four_cycle(), parse("12 23 34 14 24"));
  EXPECT_EQ(w.verdict, Verdict::not_induced);
  EXPECT_EQ(w.simplex, simplex("24"));
}

TEST(Induced, IdentityAndErrors) {
  auto d = parse("123 34");
  EXPECT_EQ(is_induced(d, d).verdict, Verdict::induced);
  EXPECT_THROW(is_induced(parse("15"), d), NotSubcomplex);
  EXPECT_THROW(is_strongly_induced(parse("15"), d), NotSubcomplex);
}

TEST(Induced, DerivedFourCycleWithChordIsInduced) {
  auto derived = pair_derive(pair_new(oracle::four_cycle(), parse("12 23 34 14 24")));
  EXPECT_EQ(is_induced(derived.sub(), derived.ambient()).verdict, Verdict::induced);
}

TEST(StronglyInduced, FilledTriangleWitnessIsBarycenterVertex) {
  auto derived = pair_derive(pair_new(oracle::four_cycle(), parse("124 23 34")));
  auto w = is_strongly_induced(derived.sub(), derived.ambient());
  ASSERT_EQ(w.verdict, Verdict::not_strongly_induced);
  EXPECT_EQ(w.simplex, Simplex::of({"b{1,2,4}@0"}));
  EXPECT_GE(w.intersection.size(), 2u);
  EXPECT_EQ(is_induced(derived.sub(), derived.ambient()).verdict, Verdict::induced);
}

TEST(StronglyInduced, EdgeInTriangle) {
  auto [biased, record] = biased_derived_subdivision(parse("12"), parse("123"));
  EXPECT_EQ(is_strongly_induced(parse("12"), biased).verdict, Verdict::strongly_induced);
  // Before biasing the pair is already strongly induced as well.
  EXPECT_EQ(is_strongly_induced(parse("12"), parse("123")).verdict, Verdict::strongly_induced);
}

TEST(StronglyInduced, VertexInTriangle) {
  EXPECT_EQ(is_strongly_induced(parse("1"), parse("123")).verdict, Verdict::strongly_induced);
}

TEST(StronglyInduced, TwoOppositeVerticesOfSquareFail) {
  // Vertices 1 and 3 are both in the star of the edge 13 but not joined in sub.
  auto w = is_strongly_induced(parse("1 3"), parse("123 134"));
  ASSERT_EQ(w.verdict, Verdict::not_strongly_induced);
  EXPECT_EQ(w.simplex, simplex("2"));
}

TEST(StronglyInduced, EmptySubIsStronglyInduced) {
  EXPECT_EQ(is_strongly_induced(SimplicialComplex(), parse("123")).verdict,
            Verdict::strongly_induced);
}

class RandomPairs : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomPairs, AgreesWithBruteForce) {
  auto [sub, ambient] = random_subcomplex_pair({6, 2, 0.5, GetParam()});
  auto ind = is_induced(sub, ambient);
  EXPECT_EQ(ind.at_least_induced(), oracle::is_induced(sub, ambient));
  if (!ind.at_least_induced()) {
    ASSERT_TRUE(ind.simplex.has_value());
    EXPECT_TRUE(ambient.contains(*ind.simplex));
    EXPECT_FALSE(sub.contains(*ind.simplex));
    for (Label v : *ind.simplex) EXPECT_TRUE(sub.has_vertex(v));
  }

  auto strong = is_strongly_induced(sub, ambient);
  auto expected = oracle::strong_witness(sub, ambient);
  EXPECT_EQ(strong.strongly(), !expected.has_value());
  if (expected) {
    EXPECT_EQ(strong.simplex, expected);
    auto common = star_intersection(sub, ambient, *strong.simplex);
    EXPECT_EQ(common.facets(), strong.intersection);
    EXPECT_GE(strong.intersection.size(), 2u);
  }
  if (strong.strongly()) EXPECT_TRUE(ind.at_least_induced());
}

TEST_P(RandomPairs, MissingSimplicesMatchBruteForce) {
  auto c = random_complex({7, 2, 0.45, GetParam()});
  EXPECT_EQ(missing_simplices(c), oracle::missing_simplices(c));
}

TEST_P(RandomPairs, InducedViaMissingSimplices) {
  // Second formulation: no missing simplex of sub is an ambient face inside V(sub).
  auto [sub, ambient] = random_subcomplex_pair({6, 3, 0.5, GetParam()});
  bool via_missing = true;
  for (const auto& m : missing_simplices(sub))
    if (ambient.contains(m)) via_missing = false;
  EXPECT_EQ(is_induced(sub, ambient).at_least_induced(), via_missing);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomPairs, ::testing::Range<std::uint64_t>(0, 150));

}  // namespace
}  // namespace stellar

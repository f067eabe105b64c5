#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "stellar/errors.hpp"
#include "stellar/label.hpp"
#include "stellar/simplex.hpp"

namespace stellar {
namespace {

TEST(Label, InterningIsInjective) {
  EXPECT_EQ(Label::intern("a"), Label::intern("a"));
  EXPECT_NE(Label::intern("a"), Label::intern("b"));
  EXPECT_EQ(Label::intern("a").token(), "a");
}

TEST(Label, OrderIsLexicographicOnTokens) {
  EXPECT_LT(Label::intern("1"), Label::intern("2"));
  EXPECT_LT(Label::intern("10"), Label::intern("2"));
  EXPECT_LT(Label::intern("9"), Label::intern("b{1,2}@0"));
}

TEST(Label, EmptyTokenRejected) { EXPECT_THROW(Label::intern(""), MalformedInput); }

TEST(Label, BarycenterTokenSortsConstituents) {
  auto b = Label::barycenter(Simplex::of({"3", "1", "2"}).vertices(), 0);
  EXPECT_EQ(b.token(), "b{1,2,3}@0");
  ASSERT_TRUE(b.is_barycenter());
  EXPECT_EQ(*b.round(), 0);
  ASSERT_EQ(b.face().size(), 3u);
  EXPECT_EQ(b.face()[0].token(), "1");

  std::vector<Label> reversed{Label::intern("2"), Label::intern("1")};
  EXPECT_EQ(Label::barycenter(reversed, 4).token(), "b{1,2}@4");
}

TEST(Label, ParsedTokensKeepStructure) {
  auto parsed = Label::intern("b{1,3}@2");
  EXPECT_TRUE(parsed.is_barycenter());
  EXPECT_EQ(*parsed.round(), 2);
  EXPECT_EQ(parsed, Label::barycenter(Simplex::of({"1", "3"}).vertices(), 2));

  auto nested = Label::intern("b{1,b{1,2}@0}@1");
  ASSERT_TRUE(nested.is_barycenter());
  ASSERT_EQ(nested.face().size(), 2u);
  EXPECT_TRUE(nested.face()[1].is_barycenter());
}

TEST(Label, NonCanonicalBarycenterLookalikesAreOriginal) {
  EXPECT_FALSE(Label::intern("b{2,1}@0").is_barycenter());
  EXPECT_FALSE(Label::intern("b{1}@0").is_barycenter());
  EXPECT_FALSE(Label::intern("b{1,2}@x").is_barycenter());
  EXPECT_FALSE(Label::intern("b{1,2}@01").is_barycenter());
  EXPECT_FALSE(Label::intern("b12").is_barycenter());
}

TEST(Label, MaxRoundRecursesIntoConstituents) {
  std::vector<Label> labels{Label::intern("x"), Label::intern("b{1,b{2,3}@5}@0")};
  EXPECT_EQ(max_round(labels), 5);
  std::vector<Label> plain{Label::intern("x")};
  EXPECT_FALSE(max_round(plain).has_value());
}

TEST(Label, ConcurrentInterningAgrees) {
  constexpr int kThreads = 8;
  std::vector<std::vector<Label>> seen(kThreads);
  std::vector<std::thread> threads;
  for (int t = 0; t < kThreads; ++t) {
    threads.emplace_back([t, &seen] {
      for (int i = 0; i < 200; ++i) seen[t].push_back(Label::intern("c" + std::to_string(i)));
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 1; t < kThreads; ++t) EXPECT_EQ(seen[t], seen[0]);
}

TEST(Simplex, SortedAndDuplicateFree) {
  auto s = Simplex::of({"3", "1", "2"});
  EXPECT_EQ(s.to_string(), "{1,2,3}");
  EXPECT_EQ(s.dim(), 2);
  EXPECT_THROW(Simplex::of({"1", "1", "2"}), MalformedInput);
  EXPECT_EQ(Simplex().dim(), -1);
}

TEST(Simplex, SetOperations) {
  auto a = Simplex::of({"1", "2", "3"});
  auto b = Simplex::of({"2", "4"});
  EXPECT_EQ(a.intersection(b), Simplex::of({"2"}));
  EXPECT_EQ(a.union_with(b), Simplex::of({"1", "2", "3", "4"}));
  EXPECT_EQ(a.difference(b), Simplex::of({"1", "3"}));
  EXPECT_TRUE(Simplex::of({"1", "3"}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_EQ(a.nonempty_faces().size(), 7u);
  EXPECT_EQ(a.boundary().size(), 3u);
}

TEST(Simplex, ShortlexPutsLowerDimensionFirst) {
  auto vertex = Simplex::of({"b{1,2,4}@0"});
  auto edge = Simplex::of({"1", "b{1,2,4}@0"});
  EXPECT_TRUE(edge < vertex);
  EXPECT_TRUE(shortlex_less(vertex, edge));
}

}  // namespace
}  // namespace stellar

#include <gtest/gtest.h>

#include <set>

#include "eulerpiv/common.hpp"
#include "eulerpiv/dsu.hpp"

namespace eulerpiv {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

TEST(Dsu, MakesetAndFind) {
  DisjointSets s(5);
  s.makeset(1);
  EXPECT_EQ(s.find(1), 1);
  EXPECT_TRUE(s.initialized(1));
  EXPECT_FALSE(s.initialized(2));
  EXPECT_EQ(code_of([&] { s.makeset(1); }), ErrorCode::AlreadyInitialized);
  EXPECT_EQ(code_of([&] { s.find(2); }), ErrorCode::Uninitialized);
}

TEST(Dsu, SingletonsAreDistinct) {
  DisjointSets s(6);
  std::set<int> reps;
  for (int x = 1; x <= 6; ++x) s.makeset(x);
  for (int x = 1; x <= 6; ++x) reps.insert(s.find(x));
  EXPECT_EQ(reps.size(), 6u);
}

TEST(Dsu, EqualRankKeepsSecondRoot) {
  DisjointSets s(2);
  s.makeset(1);
  s.makeset(2);
  EXPECT_EQ(s.unite(1, 2), std::make_pair(2, 1));
  EXPECT_EQ(s.find(1), s.find(2));
  EXPECT_EQ(s.rank(2), 1);
}

TEST(Dsu, HigherRankSurvives) {
  DisjointSets s(3);
  for (int x = 1; x <= 3; ++x) s.makeset(x);
  s.unite(1, 2);  // 2 has rank 1
  EXPECT_EQ(s.unite(2, 3), std::make_pair(2, 3));
  EXPECT_EQ(s.find(3), 2);
  EXPECT_EQ(s.find(1), 2);
}

TEST(Dsu, SameClass) {
  DisjointSets s(3);
  for (int x = 1; x <= 3; ++x) s.makeset(x);
  s.unite(1, 2);
  EXPECT_EQ(code_of([&] { s.unite(3, 3); }), ErrorCode::SameClass);
  EXPECT_EQ(code_of([&] { s.unite(1, 2); }), ErrorCode::SameClass);
}

TEST(Dsu, ChainSharesOneRepresentative) {
  const int k = 200;
  DisjointSets s(k);
  for (int x = 1; x <= k; ++x) s.makeset(x);
  for (int x = 2; x <= k; ++x) s.unite(s.find(x - 1), s.find(x));
  const int r = s.find(1);
  for (int x = 1; x <= k; ++x) EXPECT_EQ(s.find(x), r);
  EXPECT_EQ(s.counters().unites, static_cast<std::uint64_t>(k - 1));
}

TEST(Dsu, RankStaysLogarithmic) {
  Rng rng(21);
  const int k = 1024;
  DisjointSets s(k);
  for (int x = 1; x <= k; ++x) s.makeset(x);
  int classes = k;
  while (classes > 1) {
    const int x = static_cast<int>(uniform_int(rng, 1, k)), y = static_cast<int>(uniform_int(rng, 1, k));
    if (s.find(x) == s.find(y)) continue;
    const auto [rep, old] = s.unite(x, y);
    EXPECT_NE(rep, old);
    EXPECT_EQ(s.root(old), rep);
    --classes;
  }
  for (int x = 1; x <= k; ++x) EXPECT_LE(s.rank(x), 10);
}

TEST(Dsu, UniteAcceptsNonRoots) {
  DisjointSets s(4);
  for (int x = 1; x <= 4; ++x) s.makeset(x);
  s.unite(1, 2);
  s.unite(3, 4);
  s.unite(1, 3);
  EXPECT_EQ(s.find(1), s.find(4));
}

}  // namespace
}  // namespace eulerpiv

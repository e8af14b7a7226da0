#include <gtest/gtest.h>

#include "eulerpiv/generate.hpp"
#include "eulerpiv/graph.hpp"
#include "support.hpp"

namespace eulerpiv {
namespace {

using testing::inversion_sign;

Digraph parallel_pair() { return Digraph(2, {{1, 2}, {2, 1}}, {0}); }

TEST(Validate, FourCycle) {
  EXPECT_EQ(validate_instance(four_cycle()), (InstanceReport{true, true, true}));
}

TEST(Validate, SingleEdgeIsNotEulerian) {
  EXPECT_EQ(validate_instance(Digraph(2, {{1, 2}}, {0})), (InstanceReport{false, true, true}));
}

TEST(Validate, ParallelPair) {
  EXPECT_EQ(validate_instance(parallel_pair()), (InstanceReport{true, true, true}));
}

TEST(Validate, OddNodeCount) {
  Digraph g(3, {{1, 2}, {2, 3}, {3, 1}});
  const auto r = validate_instance(g);
  EXPECT_TRUE(r.eulerian);
  EXPECT_FALSE(r.perfect_matching);
  EXPECT_FALSE(r.m_even);
}

TEST(Digraph, RejectsLoopsAndBadNodes) {
  Digraph g(3);
  EXPECT_THROW(g.add_edge(2, 2), Error);
  EXPECT_THROW(g.add_edge(0, 1), Error);
  EXPECT_THROW(g.add_edge(1, 4), Error);
}

TEST(Matching, RepeatedIndexIsDuplicate) {
  try {
    Matching m({3, 1, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateEntry);
  }
  EXPECT_EQ(Matching({4, 1, 2}).edges(), (std::vector<EdgeIndex>{1, 2, 4}));
}

TEST(Parity, Examples) {
  const std::vector<int> id{1, 2, 3, 4}, a{1, 4, 2, 3}, b{1, 3, 2, 4};
  EXPECT_EQ(permutation_parity(id), Sign::plus());
  EXPECT_EQ(permutation_parity(a), Sign::plus());
  EXPECT_EQ(permutation_parity(b), Sign::minus());
}

TEST(Parity, NonContiguousValues) {
  const std::vector<int> s{10, 3, 7};
  EXPECT_EQ(permutation_parity(s).value(), inversion_sign(s));
}

TEST(Parity, Duplicate) {
  const std::vector<int> s{1, 2, 2};
  EXPECT_THROW(permutation_parity(s), Error);
}

TEST(Parity, MatchesInversionCount) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(uniform_int(rng, 0, 12));
    std::vector<int> s(n);
    for (int k = 0; k < n; ++k) s[k] = 3 * k + static_cast<int>(uniform_int(rng, 0, 2)) + (trial % 2) * 100;
    shuffle(s, rng);
    EXPECT_EQ(permutation_parity(s).value(), inversion_sign(s));
  }
}

TEST(MatchingSign, FourCycle) {
  const Digraph g = four_cycle();
  EXPECT_EQ(matching_sign(g, Matching({0, 2})), Sign::plus());
  EXPECT_EQ(matching_sign(g, Matching({1, 3})), Sign::minus());
}

TEST(MatchingSign, ParallelPairReversed) {
  EXPECT_EQ(matching_sign(parallel_pair(), Matching({1})), Sign::minus());
}

TEST(MatchingSign, NotPerfect) {
  try {
    matching_sign(four_cycle(), Matching({0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPerfectMatching);
  }
}

void expect_bijective(const Digraph& g, const Pairing& p) {
  ASSERT_EQ(p.next.size(), g.edge_count());
  std::vector<int> used(g.edge_count(), 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const EdgeIndex n = p.next[e];
    EXPECT_EQ(g.edge(n).tail, g.edge(e).head);
    EXPECT_EQ(p.prev[n], e);
    ++used[n];
  }
  for (int u : used) EXPECT_EQ(u, 1);
}

TEST(EulerPairing, FourCycleForced) {
  const Digraph g = four_cycle();
  const Pairing p = euler_pairing(g);
  EXPECT_EQ(p.next, (std::vector<EdgeIndex>{1, 2, 3, 0}));
  expect_bijective(g, p);
}

TEST(EulerPairing, ParallelPair) {
  const Pairing p = euler_pairing(parallel_pair());
  EXPECT_EQ(p.next, (std::vector<EdgeIndex>{1, 0}));
}

TEST(EulerPairing, FigureEight) {
  const Digraph g(3, {{1, 2}, {2, 1}, {1, 3}, {3, 1}});
  const Pairing p = euler_pairing(g);
  expect_bijective(g, p);
  const auto tours = euler_tours(g);
  ASSERT_EQ(tours.size(), 1u);
  EXPECT_EQ(tours[0].size(), 4u);
}

TEST(EulerPairing, NotEulerian) {
  EXPECT_THROW(euler_pairing(Digraph(2, {{1, 2}})), Error);
  EXPECT_THROW(euler_pairing(Digraph(2)), Error);
}

TEST(EulerPairing, RandomInstancesAreBijections) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 2 * static_cast<int>(uniform_int(rng, 1, 8));
    const Digraph g = random_euler_instance(m, static_cast<int>(uniform_int(rng, 0, 6)), rng);
    expect_bijective(g, euler_pairing(g));
    std::size_t covered = 0;
    for (const auto& t : euler_tours(g)) {
      covered += t.size();
      for (std::size_t k = 0; k < t.size(); ++k) EXPECT_EQ(g.edge(t[k]).head, g.edge(t[(k + 1) % t.size()]).tail);
    }
    EXPECT_EQ(covered, g.edge_count());
  }
}

TEST(SymmetricDifference, FourCycle) {
  const Digraph g = four_cycle();
  const std::vector<EdgeIndex> C{0, 1, 2, 3};
  EXPECT_EQ(symmetric_difference(g, g.matched(), C), Matching({1, 3}));
  EXPECT_EQ(symmetric_difference(g, g.matched(), {}), g.matched());
}

TEST(SymmetricDifference, NotAlternating) {
  const Digraph g = four_cycle();
  const std::vector<EdgeIndex> C{0, 1};
  try {
    symmetric_difference(g, g.matched(), C);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAlternating);
  }
}

TEST(Format, RoundTrip) {
  Rng rng(3);
  const Digraph g = random_euler_instance(8, 3, rng);
  const Digraph back = parse_digraph(format_digraph(g));
  EXPECT_EQ(back.node_count(), g.node_count());
  ASSERT_EQ(back.edge_count(), g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) EXPECT_EQ(back.edge(e), g.edge(e));
  EXPECT_EQ(back.matched(), g.matched());
}

TEST(Format, ParseErrors) {
  for (const char* text : {"", "euler 4\n", "euler 2 1\n1 2 X\n", "euler 2 2\n1 2 M\n", "graph 2 1\n1 2 M\n",
                           "euler 2 1\n1 1 M\n", "euler 2 1\n1 3 U\n"}) {
    EXPECT_THROW(parse_digraph(std::string(text)), Error) << text;
  }
}

TEST(Format, CommentsAndBlankLines) {
  const Digraph g = parse_digraph(std::string("# four cycle\neuler 4 4\n1 2 M\n\n2 3 U # tail\n3 4 M\n4 1 U\n"));
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.matched(), Matching({0, 2}));
}

TEST(Format, Dot) {
  const std::string dot = to_dot(four_cycle());
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("1 -> 2"), std::string::npos);
}

}  // namespace
}  // namespace eulerpiv

#include <gtest/gtest.h>

#include "eulerpiv/generate.hpp"
#include "eulerpiv/oik.hpp"
#include "eulerpiv/pivot.hpp"

namespace eulerpiv {
namespace {

// nodes a1 a2 a3 b1 b2 are 0..4
constexpr int a1 = 0, a2 = 1, a3 = 2, b1 = 3, b2 = 4;

TableSystem three_states() {
  TableSystem sys(3, {1, 2, 3, 1, 2});
  const int s0 = sys.add_state({a1, a2, a3}, Sign::plus(), "s0");
  const int s1 = sys.add_state({b2, a2, a3}, Sign::minus(), "s1");
  const int s2 = sys.add_state({b2, b1, a3}, Sign::plus(), "s2");
  sys.add_pivot(s0, 0, s1, {0, 1, 2});
  sys.add_pivot(s1, 1, s2, {0, 1, 2});
  return sys;
}

// Same states, representations (a1,a2,a3) (a2,a3,b2) (a3,b1,b2).
TableSystem three_states_permuted() {
  TableSystem sys(3, {1, 2, 3, 1, 2});
  const int s0 = sys.add_state({a1, a2, a3}, Sign::plus(), "s0");
  const int s1 = sys.add_state({a2, a3, b2}, Sign::minus(), "s1");
  const int s2 = sys.add_state({a3, b1, b2}, Sign::minus(), "s2");
  sys.add_pivot(s0, 0, s1, {2, 0, 1});
  sys.add_pivot(s1, 0, s2, {1, 0, 2});
  return sys;
}

TEST(Classify, Examples) {
  EXPECT_TRUE(classify_labels({1, 2, 3}).is_cl());
  const StateClass c = classify_labels({2, 2, 3});
  EXPECT_TRUE(c.is_acl());
  EXPECT_EQ(c.missing, 1);
  EXPECT_EQ(c.first, 0);
  EXPECT_EQ(c.second, 1);
  EXPECT_EQ(classify_labels({1, 1, 1}).kind, StateClass::Kind::Other);
  EXPECT_EQ(classify_labels({1, 4, 2}).kind, StateClass::Kind::Other);
}

TEST(Classify, SystemStates) {
  const TableSystem sys = three_states();
  EXPECT_TRUE(classify(sys, 0).is_cl());
  EXPECT_TRUE(classify(sys, 1).is_acl());
  EXPECT_TRUE(classify(sys, 2).is_cl());
}

TEST(StateSign, ExampleEndpoints) {
  const TableSystem sys = three_states();
  EXPECT_EQ(state_sign(sys, 0), Sign::plus());
  EXPECT_EQ(state_sign(sys, 2), Sign::minus());
  // the two duplicate positions of an ACL state have opposite signs
  EXPECT_EQ(state_sign(sys, 1, 0), -state_sign(sys, 1, 1));
}

TEST(StateSign, Errors) {
  const TableSystem sys = three_states();
  auto code = [&](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code([&] { state_sign(sys, 1); }), ErrorCode::WrongClass);
  EXPECT_EQ(code([&] { state_sign(sys, 1, 2); }), ErrorCode::BadPosition);
}

TEST(FollowPath, Example) {
  const TableSystem sys = three_states();
  const auto p = follow_path(sys, 0, 1);
  EXPECT_EQ(p.end, 2);
  EXPECT_EQ(p.steps, 2u);
  EXPECT_EQ(p.states, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(p.start_sign, -p.end_sign);
  EXPECT_TRUE(p.signs_consistent);
}

TEST(FollowPath, PermutedRepresentation) {
  const TableSystem sys = three_states_permuted();
  const auto p = follow_path(sys, 0, 1);
  EXPECT_EQ(p.end, 2);
  EXPECT_TRUE(p.signs_consistent);
  EXPECT_EQ(p.start_sign, Sign::plus());
  EXPECT_EQ(p.end_sign, Sign::minus());
}

TEST(FollowPath, Reversible) {
  const TableSystem sys = three_states();
  EXPECT_EQ(follow_path(sys, 2, 1).end, 0);
}

TEST(FollowPath, InconsistentOrientationIsReported) {
  TableSystem sys(3, {1, 2, 3, 1, 2});
  sys.add_state({a1, a2, a3}, Sign::plus());
  sys.add_state({b2, a2, a3}, Sign::plus());
  sys.add_state({b2, b1, a3}, Sign::plus());
  sys.add_pivot(0, 0, 1, {0, 1, 2});
  sys.add_pivot(1, 1, 2, {0, 1, 2});
  EXPECT_FALSE(follow_path(sys, 0, 1).signs_consistent);
}

TEST(FollowPath, Errors) {
  const TableSystem sys = three_states();
  EXPECT_THROW(follow_path(sys, 1, 1), Error);
  EXPECT_THROW(follow_path(sys, 0, 4), Error);
  PathOptions o;
  o.step_cap = 1;
  try {
    follow_path(sys, 0, 1, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StepLimitExceeded);
  }
}

TEST(FollowPath, TraceLines) {
  const TableSystem sys = three_states();
  PathOptions o;
  o.trace = true;
  const auto p = follow_path(sys, 0, 1, o);
  ASSERT_EQ(p.trace.size(), 2u);
  EXPECT_EQ(p.trace[0], "step 1: drop pos 1 -> state s1 pi=(1,2,3) sigma=-1");
}

TEST(PairAll, OctahedronOrdered) {
  const OikFile f = octahedron_oik();
  const OrientedOik o = orient_and_pair(f.oik, f.sigma);
  const std::vector<OrientedOik> family{o, o};
  const OikSumSystem sys(family);
  const auto parts = enumerate_partitions(family);
  const auto pairing = pair_all_cl_states(sys, 1, parts);
  EXPECT_EQ(pairing.pairs.size(), parts.size() / 2);
  EXPECT_EQ(pairing.plus, pairing.minus);
  EXPECT_TRUE(pairing.all_opposite);

  const int A = *find_room(f.oik, {1, 2, 3}), a = *find_room(f.oik, {4, 5, 6});
  const int B = *find_room(f.oik, {1, 4, 5}), b = *find_room(f.oik, {2, 3, 6});
  EXPECT_EQ(follow_path(sys, std::vector<int>{A, a}, 1).end, (std::vector<int>{b, B}));
}

TEST(PairAll, FourCycleMatchings) {
  const OrientedOik o = digraph_oik(four_cycle());
  const std::vector<OrientedOik> family{o, o};
  const OikSumSystem sys(family);
  const auto pairing = pair_all_cl_states(sys, 1, enumerate_partitions(family));
  EXPECT_EQ(pairing.pairs.size(), 2u);
  EXPECT_TRUE(pairing.all_opposite);
}

TEST(PairAll, Empty) {
  const TableSystem sys = three_states();
  const auto pairing = pair_all_cl_states(sys, 1, std::vector<int>{});
  EXPECT_TRUE(pairing.pairs.empty());
  EXPECT_EQ(pairing.plus, 0u);
}

}  // namespace
}  // namespace eulerpiv

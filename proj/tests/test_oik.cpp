#include <gtest/gtest.h>

#include <set>

#include "eulerpiv/generate.hpp"
#include "eulerpiv/oik.hpp"
#include "support.hpp"

namespace eulerpiv {
namespace {

using testing::room_set;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

struct Octahedron {
  OikFile file = octahedron_oik();
  OrientedOik o = orient_and_pair(file.oik, file.sigma);
  int room(Room r) const { return *find_room(file.oik, std::move(r)); }
  int A = room({1, 2, 3}), a = room({4, 5, 6});
  int B = room({1, 4, 5}), b = room({2, 3, 6});
  int C = room({1, 2, 4}), c = room({3, 5, 6});
  int D = room({1, 3, 5}), d = room({2, 4, 6});
};

TEST(Validate, FourCycle) {
  const auto r = validate_oik(make_oik(2, 4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  EXPECT_TRUE(r.is_oik);
  EXPECT_TRUE(r.is_manifold);
}

TEST(Validate, Octahedron) {
  const auto r = validate_oik(octahedron_oik().oik);
  EXPECT_TRUE(r.is_oik);
  EXPECT_TRUE(r.is_manifold);
}

TEST(Validate, OddWall) {
  const auto r = validate_oik(make_oik(2, 3, {{1, 2}, {1, 3}}));
  EXPECT_FALSE(r.is_oik);
  ASSERT_TRUE(r.offending_wall.has_value());
  EXPECT_TRUE(*r.offending_wall == Room{2} || *r.offending_wall == Room{3});
}

TEST(Validate, NonManifoldOik) {
  // the wall {1} lies in four rooms
  const auto r = validate_oik(make_oik(2, 5, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {1, 5}}));
  EXPECT_TRUE(r.is_oik);
  EXPECT_FALSE(r.is_manifold);
}

TEST(MakeOik, Errors) {
  EXPECT_EQ(code_of([] { make_oik(2, 3, {{1, 4}}); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([] { make_oik(2, 3, {{1, 1}}); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([] { make_oik(3, 3, {{1, 2}}); }), ErrorCode::BadParams);
  EXPECT_EQ(make_oik(2, 3, {{3, 1}}).rooms[0], (Room{1, 3}));
}

TEST(Orient, FourCycleFollowsEulerPairing) {
  const OrientedOik o = digraph_oik(four_cycle());
  EXPECT_EQ(o.sigma, (std::vector<Sign>{Sign::plus(), Sign::plus(), Sign::plus(), Sign::minus()}));
  EXPECT_TRUE(is_coherent(o.oik, o.sigma));
  // room 0 = 12: across the wall {2} (omitting node 1) it meets 23
  EXPECT_EQ(o.partner[0][0], 1);
  EXPECT_EQ(o.partner[0][1], 3);
}

TEST(Orient, EulerianOrientationOfTwoOik) {
  const Oik oik = make_oik(2, 4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 4}, {1, 3}, {2, 4}});
  const OrientedOik o = orient_and_pair(oik);
  EXPECT_TRUE(is_coherent(oik, o.sigma));
}

TEST(Orient, OctahedronGivenSigmaIsCoherent) {
  const OikFile f = octahedron_oik();
  EXPECT_TRUE(is_coherent(f.oik, *f.sigma));
  const OrientedOik o = orient_and_pair(f.oik, f.sigma);
  EXPECT_EQ(o.sigma, *f.sigma);
  for (std::size_t r = 0; r < o.size(); ++r) {
    for (int i = 0; i < 3; ++i) {
      const int q = o.partner[r][i];
      ASSERT_GE(q, 0);
      Room wall = o.room(static_cast<int>(r));
      wall.erase(wall.begin() + i);
      const Room& other = o.room(q);
      EXPECT_TRUE(std::includes(other.begin(), other.end(), wall.begin(), wall.end()));
      const auto& back = o.partner[q];
      EXPECT_NE(std::find(back.begin(), back.end(), static_cast<int>(r)), back.end());
    }
  }
}

TEST(Orient, OctahedronPropagatedUpToSign) {
  const OikFile f = octahedron_oik();
  const OrientedOik o = orient_and_pair(f.oik);
  const Sign flip = o.sigma[0] * (*f.sigma)[0];
  for (std::size_t r = 0; r < o.size(); ++r) EXPECT_EQ(o.sigma[r], flip * (*f.sigma)[r]);
}

TEST(Orient, Incoherent) {
  OikFile f = octahedron_oik();
  (*f.sigma)[0] = -(*f.sigma)[0];
  EXPECT_FALSE(is_coherent(f.oik, *f.sigma));
  EXPECT_EQ(code_of([&] { orient_and_pair(f.oik, f.sigma); }), ErrorCode::IncoherentOrientation);
}

TEST(Orient, KleinBottleIsNotOrientable) {
  const Oik k = klein_bottle_oik(3, 3);
  EXPECT_TRUE(validate_oik(k).is_manifold);
  EXPECT_EQ(code_of([&] { orient_and_pair(k); }), ErrorCode::NotOrientable);
}

TEST(Orient, TorusIsOrientable) {
  const Oik t = torus_oik(3, 4);
  EXPECT_TRUE(validate_oik(t).is_manifold);
  const OrientedOik o = orient_and_pair(t);
  EXPECT_TRUE(is_coherent(t, o.sigma));
}

TEST(Orient, NonManifoldThreeOikNeedsSigma) {
  // two octahedra sharing the edge 12, whose wall then lies in four rooms
  const OikFile f = octahedron_oik();
  std::vector<Room> rooms = f.oik.rooms;
  std::vector<Sign> sigma = *f.sigma;
  for (std::size_t r = 0; r < f.oik.rooms.size(); ++r) {
    Room copy = f.oik.rooms[r];
    for (int& v : copy) v = v <= 2 ? v : v + 4;
    rooms.push_back(copy);
    sigma.push_back((*f.sigma)[r]);
  }
  const Oik glued = make_oik(3, 10, rooms);
  EXPECT_TRUE(validate_oik(glued).is_oik);
  EXPECT_FALSE(validate_oik(glued).is_manifold);
  EXPECT_EQ(code_of([&] { orient_and_pair(glued); }), ErrorCode::NeedExplicitOrientation);
  const OrientedOik o = orient_and_pair(glued, sigma);
  const std::vector<OrientedOik> family{o, o};
  const auto pairing = pair_all_cl_states(OikSumSystem(family), 1, enumerate_partitions(family));
  EXPECT_TRUE(pairing.all_opposite);
}

TEST(Sum, TwoFourCycles) {
  const OrientedOik o = digraph_oik(four_cycle());
  const OrientedOik s = oik_sum({o, o});
  EXPECT_EQ(s.d(), 4);
  EXPECT_EQ(s.n(), 8);
  EXPECT_EQ(s.size(), 16u);
  EXPECT_TRUE(validate_oik(s.oik).is_oik);
  EXPECT_TRUE(is_coherent(s.oik, s.sigma));
  // room 12 of copy 1 and 34 of copy 2 is {1,2,7,8}
  const auto r = find_room(s.oik, {1, 2, 7, 8});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(s.sigma[*r], o.sigma[0] * o.sigma[2]);
}

TEST(Sum, MixedUniverse) {
  const OrientedOik a = digraph_oik(four_cycle());
  const OrientedOik b = digraph_oik(Digraph(2, {{1, 2}, {2, 1}}));
  EXPECT_EQ(code_of([&] { oik_sum({a, b}); }), ErrorCode::MixedUniverse);
}

TEST(Partitions, Octahedron) {
  const Octahedron h;
  const std::vector<OrientedOik> family{h.o, h.o};
  const auto unordered = enumerate_partitions(family, true);
  std::set<std::set<int>> got;
  for (const auto& p : unordered) got.insert({p.begin(), p.end()});
  const std::set<std::set<int>> want{{h.A, h.a}, {h.B, h.b}, {h.C, h.c}, {h.D, h.d}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(enumerate_partitions(family).size(), 8u);
}

TEST(Partitions, OctahedronSigns) {
  const Octahedron h;
  const std::vector<OrientedOik> family{h.o, h.o};
  EXPECT_EQ(partition_sign(family, {h.A, h.a}), Sign::plus());
  EXPECT_EQ(partition_sign(family, {h.b, h.B}), Sign::minus());
  EXPECT_EQ(partition_sign(family, {h.C, h.c}), Sign::minus());
  EXPECT_EQ(partition_sign(family, {h.B, h.b}), Sign::plus());
}

TEST(Partitions, LeftFourNodeOik) {
  const OrientedOik o = digraph_oik(left_four_node_graph());
  const std::vector<OrientedOik> family{o, o};
  const int r12 = *find_room(o.oik, {1, 2}), r34 = *find_room(o.oik, {3, 4});
  const int r14 = *find_room(o.oik, {1, 4}), r23 = *find_room(o.oik, {2, 3});
  std::set<std::set<int>> got;
  for (const auto& p : enumerate_partitions(family, true)) got.insert({p.begin(), p.end()});
  EXPECT_EQ(got, (std::set<std::set<int>>{{r12, r34}, {r14, r23}}));
  EXPECT_EQ(partition_sign(family, {r12, r34}), Sign::plus());
  EXPECT_EQ(partition_sign(family, {r14, r23}), Sign::minus());
}

TEST(Partitions, RightFourNodeOik) {
  const OrientedOik o = digraph_oik(right_four_node_graph());
  const std::vector<OrientedOik> family{o, o};
  const OikSumSystem sys(family);
  const int r12 = *find_room(o.oik, {1, 2}), r34 = *find_room(o.oik, {3, 4});
  const int r13 = *find_room(o.oik, {1, 3}), r24 = *find_room(o.oik, {2, 4});
  EXPECT_EQ(sys.orientation({r12, r34}), Sign::plus());
  EXPECT_EQ(sys.orientation({r13, r24}), Sign::plus());
  EXPECT_EQ(partition_sign(family, {r12, r34}), Sign::plus());
  EXPECT_EQ(partition_sign(family, {r13, r24}), Sign::minus());
}

TEST(Partitions, NotAPartition) {
  const OrientedOik o = digraph_oik(four_cycle());
  EXPECT_EQ(code_of([&] { partition_sign({o, o}, {0, 1}); }), ErrorCode::NotAPartition);
}

TEST(Partitions, EmptyOik) {
  const OrientedOik o = orient_and_pair(make_oik(2, 4, {}), std::vector<Sign>{});
  EXPECT_TRUE(enumerate_partitions({o, o}).empty());
}

TEST(Exchange, OctahedronPath) {
  const Octahedron h;
  const auto r = exchange_path({h.o, h.o}, {h.A, h.a}, 1);
  EXPECT_EQ(r.states, (std::vector<std::vector<int>>{{h.A, h.a}, {h.b, h.a}, {h.b, h.B}}));
  EXPECT_EQ(r.end, (std::vector<int>{h.b, h.B}));
  EXPECT_EQ(*r.start_sign, Sign::plus());
  EXPECT_EQ(*r.end_sign, Sign::minus());
  EXPECT_TRUE(r.signs_consistent);
}

TEST(Exchange, FourCycleMatchings) {
  EXPECT_EQ(exchange_matching(four_cycle()), Matching({1, 3}));
  const OrientedOik o = digraph_oik(four_cycle());
  const auto r = exchange_path({o, o}, {0, 2}, 1);
  std::set<int> end(r.end.begin(), r.end.end());
  EXPECT_EQ(end, (std::set<int>{1, 3}));
}

TEST(Exchange, RandomDigraphsGiveOppositeMatchings) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph g = random_euler_instance(2 * static_cast<int>(uniform_int(rng, 1, 5)), 4, rng);
    const Matching M = exchange_matching(g);
    ASSERT_TRUE(is_perfect_matching(g, M));
    EXPECT_EQ(matching_sign(g, M), -matching_sign(g, g.matched()));
  }
}

TEST(Exchange, UnorderedAgreesWithPartitionSign) {
  Rng rng(43);
  int nonempty = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 * static_cast<int>(uniform_int(rng, 2, 5));
    const OikFile f = random_two_oik(n, static_cast<int>(uniform_int(rng, 2, 6)), rng);
    const OrientedOik o = orient_and_pair(f.oik, f.sigma);
    const int h = n / 2;
    const std::vector<OrientedOik> family(h, o);
    const auto parts = enumerate_partitions(family, true);
    std::set<std::vector<int>> known(parts.begin(), parts.end());
    nonempty += !parts.empty();
    for (const auto& p : parts) {
      const auto r = exchange_path_unordered(o, h, p, 1);
      EXPECT_TRUE(known.count(r.end));
      EXPECT_NE(r.end, p);
      ASSERT_TRUE(r.start_sign && r.end_sign);
      EXPECT_EQ(*r.start_sign, partition_sign(family, p));
      EXPECT_EQ(*r.end_sign, -*r.start_sign);
      EXPECT_TRUE(r.signs_consistent);
    }
  }
  EXPECT_GT(nonempty, 10);
}

TEST(Exchange, OddDimensionUnorderedHasNoSigns) {
  const Octahedron h;
  const auto r = exchange_path_unordered(h.o, 2, {h.A, h.a}, 1);
  std::set<int> end(r.end.begin(), r.end.end());
  EXPECT_EQ(end, (std::set<int>{h.B, h.b}));
  EXPECT_FALSE(r.start_sign.has_value());
}

TEST(Sperner, SmallExample) {
  const Oik s = sperner_oik({1, 2, 1, 2}, 2);
  EXPECT_EQ(s.d, 2);
  EXPECT_EQ(room_set(s), (std::set<Room>{{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  const auto r = validate_oik(s);
  EXPECT_TRUE(r.is_oik);
  EXPECT_TRUE(r.is_manifold);
}

TEST(Sperner, Errors) {
  EXPECT_EQ(code_of([] { sperner_oik({1, 1, 1, 2, 1}, 3); }), ErrorCode::NotSurjective);
  EXPECT_EQ(code_of([] { sperner_oik({1, 2}, 2); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([] { sperner_oik({1, 2, 1}, 2); }), ErrorCode::BadParams);
}

TEST(Sperner, RandomLabelingsAreManifolds) {
  Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = static_cast<int>(uniform_int(rng, 1, 3));
    const int n = m + static_cast<int>(uniform_int(rng, 2, 4));
    std::vector<int> l(n);
    for (int j = 0; j < n; ++j) l[j] = j < m ? j + 1 : static_cast<int>(uniform_int(rng, 1, m));
    const auto r = validate_oik(sperner_oik(l, m));
    EXPECT_TRUE(r.is_oik);
    EXPECT_TRUE(r.is_manifold);
  }
}

TEST(Format, RoundTrip) {
  const OikFile f = octahedron_oik();
  const OikFile back = parse_oik(format_oik(f.oik, &*f.sigma));
  EXPECT_EQ(back.oik.rooms, f.oik.rooms);
  EXPECT_EQ(back.oik.n, 6);
  EXPECT_EQ(*back.sigma, *f.sigma);
  EXPECT_FALSE(parse_oik(format_oik(f.oik)).sigma.has_value());
}

TEST(Format, PartialOrientationRejected) {
  EXPECT_THROW(parse_oik(std::string("oik 2 2\n1 2 +1\n1 2\n")), Error);
  EXPECT_THROW(parse_oik(std::string("oik 2 1\n1 2 3\n")), Error);
}

TEST(Format, RoomNames) {
  EXPECT_EQ(room_name({2, 3, 6}), "236");
  EXPECT_EQ(room_name({2, 13}), "2.13");
}

}  // namespace
}  // namespace eulerpiv

#pragma once

// Euler complexes (oiks): rooms are d-sets over nodes 1..n in which every
// (d-1)-set lies in an even number of rooms.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eulerpiv/common.hpp"
#include "eulerpiv/graph.hpp"
#include "eulerpiv/pivot.hpp"

namespace eulerpiv {

/// Ascending node ids.
using Room = std::vector<int>;

struct Oik {
  int d = 0;
  int n = 0;
  std::vector<Room> rooms;
};

/// Sorts every room; throws BadParams on out-of-range or repeated nodes or
/// rooms of the wrong size.
Oik make_oik(int d, int n, std::vector<Room> rooms);

struct OikReport {
  bool is_oik = false;
  bool is_manifold = false;
  std::optional<Room> offending_wall;  // a wall in an odd number of rooms
};

OikReport validate_oik(const Oik& oik);

struct OrientedOik {
  Oik oik;
  std::vector<Sign> sigma;
  /// partner[r][i]: the room paired with room r across the wall that omits
  /// its i-th node.
  std::vector<std::vector<int>> partner;

  int d() const { return oik.d; }
  int n() const { return oik.n; }
  std::size_t size() const { return oik.rooms.size(); }
  const Room& room(int r) const { return oik.rooms.at(r); }
};

/// (-1)^(i+1) * sigma for the wall omitting 0-based position i.
inline Sign induced_orientation(Sign sigma, int i) { return i % 2 == 0 ? -sigma : sigma; }

/// Orients and pairs an oik. Without `sigma`, 2-oiks get an Eulerian
/// orientation and manifolds are oriented by propagation (NotOrientable on a
/// contradiction); other oiks need an explicit orientation
/// (NeedExplicitOrientation). A supplied sigma is checked
/// (IncoherentOrientation). 2-oiks are paired along Euler tours, other walls
/// by zipping the +1 and -1 rooms in index order.
OrientedOik orient_and_pair(const Oik& oik, std::optional<std::vector<Sign>> sigma = std::nullopt);

/// True if half of the rooms at every wall induce +1.
bool is_coherent(const Oik& oik, const std::vector<Sign>& sigma);

/// A digraph as a 2-oik: edge e is room e, with sigma +1 iff tail < head,
/// paired by euler_pairing.
OrientedOik digraph_oik(const Digraph& g);

/// Index of the first room with these nodes, if any.
std::optional<int> find_room(const Oik& oik, Room nodes);

/// Oik-sum over [h] x V with node (p, v) numbered (p-1)*n + v, so node order
/// is lexicographic. Throws MixedUniverse.
OrientedOik oik_sum(const std::vector<OrientedOik>& family);

/// sigma of the sum room times the parity of the concatenated rooms.
/// `partition[p]` indexes a room of family[p]. Throws NotAPartition.
Sign partition_sign(const std::vector<OrientedOik>& family, const std::vector<int>& partition);

/// Ordered room partitions of the family (room index per oik), or, when
/// `unordered` is set and the family repeats one oik, partitions with
/// strictly increasing room indices. Throws TooLarge when n > cap.
std::vector<std::vector<int>> enumerate_partitions(const std::vector<OrientedOik>& family,
                                                   bool unordered = false, int cap = 14);

/// Pivoting system on tuples of rooms (one from each oik) with label v on
/// every copy of node v.
class OikSumSystem {
 public:
  using State = std::vector<int>;

  explicit OikSumSystem(const std::vector<OrientedOik>& family);

  int arity() const { return arity_; }
  std::vector<int> representation(const State& s) const;
  PivotStep<State> pivot(const State& s, int i) const;
  int label(int v) const { return (v - 1) % n_ + 1; }
  Sign orientation(const State& s) const;
  std::uint64_t state_count() const { return state_count_; }
  std::string state_name(const State& s) const;

 private:
  const std::vector<OrientedOik>& family_;
  int n_;
  int arity_;
  std::uint64_t state_count_;
};

/// Pivoting system on multisets of h rooms of one oik, rooms kept in
/// ascending index order.
class UnorderedOikSystem {
 public:
  using State = std::vector<int>;

  UnorderedOikSystem(const OrientedOik& oik, int h);

  int arity() const { return oik_.d() * h_; }
  std::vector<int> representation(const State& s) const;
  PivotStep<State> pivot(const State& s, int i) const;
  int label(int v) const { return v; }
  Sign orientation(const State& s) const;
  std::uint64_t state_count() const { return state_count_; }
  std::string state_name(const State& s) const;

 private:
  const OrientedOik& oik_;
  int h_;
  std::uint64_t state_count_;
};

/// Hides the orientation of a system, for odd-dimensional unordered mode.
template <PivotingSystem S>
class Unoriented {
 public:
  using State = typename S::State;
  explicit Unoriented(const S& inner) : inner_(inner) {}
  int arity() const { return inner_.arity(); }
  std::vector<int> representation(const State& s) const { return inner_.representation(s); }
  PivotStep<State> pivot(const State& s, int i) const { return inner_.pivot(s, i); }
  int label(int v) const { return inner_.label(v); }
  std::uint64_t state_count() const { return inner_.state_count(); }
  std::string state_name(const State& s) const { return inner_.state_name(s); }

 private:
  const S& inner_;
};

struct ExchangeResult {
  std::vector<int> end;
  std::vector<std::vector<int>> states;
  std::uint64_t steps = 0;
  std::optional<Sign> start_sign;
  std::optional<Sign> end_sign;
  bool signs_consistent = true;
  std::vector<std::string> trace;
};

/// Exchange algorithm on ordered room partitions, dropping node w.
ExchangeResult exchange_path(const std::vector<OrientedOik>& family, const std::vector<int>& partition,
                             int w, PathOptions options = {});

/// Exchange algorithm on unordered partitions into h rooms of one oik. Signs
/// are reported only for even d.
ExchangeResult exchange_path_unordered(const OrientedOik& oik, int h, const std::vector<int>& partition,
                                       int w, PathOptions options = {});

/// Exchange on the 2-oik of a digraph from its matched edges, h = m/2.
Matching exchange_matching(const Digraph& g, int w = 1, PathOptions options = {});

/// Rooms are the complements of completely labeled sets of labeling
/// l(1..n) -> [m]. Throws NotSurjective, BadParams when n - m < 2.
Oik sperner_oik(const std::vector<int>& labels, int m);

// Oik text format:
//   oik <d> <r>
//   <d ascending node ids> [+1|-1]      (r lines)
// Node universe is 1..max id. Orientations must be given on all rooms or none.
struct OikFile {
  Oik oik;
  std::optional<std::vector<Sign>> sigma;
};
OikFile parse_oik(std::istream& in);
OikFile parse_oik(const std::string& text);
std::string format_oik(const Oik& oik, const std::vector<Sign>* sigma = nullptr);

std::string room_name(const Room& r);

}  // namespace eulerpiv

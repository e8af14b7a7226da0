#include "eulerpiv/oik.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "text_util.hpp"

namespace eulerpiv {

namespace {

struct Incidence {
  int room;
  int pos;  // 0-based position of the omitted node
};

using WallMap = std::map<Room, std::vector<Incidence>>;

Room wall_of(const Room& r, int pos) {
  Room w;
  w.reserve(r.size() - 1);
  for (int k = 0; k < static_cast<int>(r.size()); ++k) {
    if (k != pos) w.push_back(r[k]);
  }
  return w;
}

WallMap walls(const Oik& oik) {
  WallMap out;
  for (int r = 0; r < static_cast<int>(oik.rooms.size()); ++r) {
    for (int k = 0; k < oik.d; ++k) out[wall_of(oik.rooms[r], k)].push_back({r, k});
  }
  return out;
}

int position_of(const Room& r, int v) {
  auto it = std::lower_bound(r.begin(), r.end(), v);
  if (it == r.end() || *it != v) return -1;
  return static_cast<int>(it - r.begin());
}

// The node of `next` outside the wall of `prev` that omits position k.
// Parallel rooms share all nodes, so the omitted node comes straight back.
int entering_node(const Room& prev, int k, const Room& next) {
  const Room wall = wall_of(prev, k);
  for (int u : next) {
    if (!std::binary_search(wall.begin(), wall.end(), u)) return u;
  }
  fail(ErrorCode::Internal, "room " + room_name(next) + " does not extend wall of " + room_name(prev));
}

std::vector<std::vector<int>> empty_partner(const Oik& oik) {
  return std::vector<std::vector<int>>(oik.rooms.size(), std::vector<int>(oik.d, -1));
}

void zip_pairing(const WallMap& wm, const std::vector<Sign>& sigma,
                 std::vector<std::vector<int>>& partner) {
  for (const auto& [wall, inc] : wm) {
    std::vector<Incidence> plus, minus;
    for (const Incidence& x : inc) {
      (induced_orientation(sigma[x.room], x.pos).positive() ? plus : minus).push_back(x);
    }
    if (plus.size() != minus.size()) fail(ErrorCode::IncoherentOrientation, "wall " + room_name(wall));
    for (std::size_t k = 0; k < plus.size(); ++k) {
      partner[plus[k].room][plus[k].pos] = minus[k].room;
      partner[minus[k].room][minus[k].pos] = plus[k].room;
    }
  }
}

// Orients the edges of an even-degree multigraph by walking closed trails.
std::vector<Sign> eulerian_orientation(const Oik& oik) {
  const int n = oik.n;
  const int r = static_cast<int>(oik.rooms.size());
  std::vector<std::vector<int>> adj(n + 1);
  for (int e = 0; e < r; ++e) {
    adj[oik.rooms[e][0]].push_back(e);
    adj[oik.rooms[e][1]].push_back(e);
  }
  std::vector<std::size_t> cursor(n + 1, 0);
  std::vector<bool> used(r, false);
  std::vector<Sign> sigma(r, Sign::plus());
  for (int first = 0; first < r; ++first) {
    if (used[first]) continue;
    int cur = oik.rooms[first][0];
    int e = first;
    for (;;) {
      used[e] = true;
      const Room& room = oik.rooms[e];
      const int other = room[0] == cur ? room[1] : room[0];
      sigma[e] = cur < other ? Sign::plus() : Sign::minus();
      cur = other;
      auto& c = cursor[cur];
      while (c < adj[cur].size() && used[adj[cur][c]]) ++c;
      if (c == adj[cur].size()) break;
      e = adj[cur][c];
    }
  }
  return sigma;
}

Digraph oriented_digraph(const Oik& oik, const std::vector<Sign>& sigma) {
  std::vector<Edge> edges;
  edges.reserve(oik.rooms.size());
  for (std::size_t e = 0; e < oik.rooms.size(); ++e) {
    const Room& room = oik.rooms[e];
    edges.push_back(sigma[e].positive() ? Edge{room[0], room[1]} : Edge{room[1], room[0]});
  }
  return Digraph(oik.n, std::move(edges));
}

std::vector<std::vector<int>> tour_pairing(const Oik& oik, const Digraph& g) {
  auto partner = empty_partner(oik);
  if (g.edge_count() == 0) return partner;
  const Pairing p = euler_pairing(g);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Node v = g.edge(e).head;
    const EdgeIndex f = p.next[e];
    // the wall {v} omits the other endpoint
    partner[e][1 - position_of(oik.rooms[e], v)] = static_cast<int>(f);
    partner[f][1 - position_of(oik.rooms[f], v)] = static_cast<int>(e);
  }
  return partner;
}

std::vector<Sign> propagate_orientation(const Oik& oik, const WallMap& wm) {
  const int r = static_cast<int>(oik.rooms.size());
  std::vector<int> sigma(r, 0);
  for (int seed = 0; seed < r; ++seed) {
    if (sigma[seed] != 0) continue;
    sigma[seed] = 1;
    std::deque<int> queue{seed};
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (int k = 0; k < oik.d; ++k) {
        const auto& inc = wm.at(wall_of(oik.rooms[a], k));
        if (inc.size() != 2) continue;
        const Incidence& other = inc[0].room == a && inc[0].pos == k ? inc[1] : inc[0];
        // induced(a, k) must be the negative of induced(other)
        const int ia = (k % 2 == 0 ? -1 : 1) * sigma[a];
        const int want = -ia * (other.pos % 2 == 0 ? -1 : 1);
        if (sigma[other.room] == 0) {
          sigma[other.room] = want;
          queue.push_back(other.room);
        } else if (sigma[other.room] != want) {
          fail(ErrorCode::NotOrientable, "orientation contradiction at wall " + room_name(wall_of(oik.rooms[a], k)));
        }
      }
    }
  }
  std::vector<Sign> out;
  out.reserve(r);
  for (int s : sigma) out.push_back(Sign::from_int(s));
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

Sign product_orientation(const std::vector<OrientedOik>& family, const std::vector<int>& s) {
  Sign sg = Sign::plus();
  for (std::size_t p = 0; p < family.size(); ++p) sg *= family[p].sigma.at(s[p]);
  return sg;
}

void check_partition(const std::vector<OrientedOik>& family, const std::vector<int>& partition) {
  if (family.empty()) fail(ErrorCode::NotAPartition, "empty oik family");
  if (partition.size() != family.size()) fail(ErrorCode::NotAPartition, "one room per oik is required");
  const int n = family[0].n();
  std::vector<bool> seen(n + 1, false);
  int covered = 0;
  for (std::size_t p = 0; p < family.size(); ++p) {
    if (family[p].n() != n) fail(ErrorCode::MixedUniverse, "oiks over different node sets");
    if (partition[p] < 0 || partition[p] >= static_cast<int>(family[p].size())) {
      fail(ErrorCode::NotAPartition, "room index out of range");
    }
    for (int v : family[p].room(partition[p])) {
      if (seen[v]) fail(ErrorCode::NotAPartition, "node " + std::to_string(v) + " covered twice");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n) fail(ErrorCode::NotAPartition, "rooms do not cover every node");
}

std::string partition_name(const std::vector<OrientedOik>& family, const std::vector<int>& s) {
  std::string out = "(";
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (p) out += ',';
    out += room_name(family[p].room(s[p]));
  }
  return out + ")";
}

ExchangeResult collect(const PathResult<std::vector<int>>& path, bool oriented) {
  ExchangeResult out;
  out.end = path.end;
  out.states = path.states;
  out.steps = path.steps;
  out.trace = path.trace;
  if (oriented) {
    out.start_sign = path.start_sign;
    out.end_sign = path.end_sign;
    out.signs_consistent = path.signs_consistent;
  }
  return out;
}

}  // namespace

std::string room_name(const Room& r) {
  const bool short_ids = std::all_of(r.begin(), r.end(), [](int v) { return v >= 1 && v <= 9; });
  std::string out;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (!short_ids && k) out += '.';
    out += std::to_string(r[k]);
  }
  return out.empty() ? "{}" : out;
}

Oik make_oik(int d, int n, std::vector<Room> rooms) {
  if (d < 1) fail(ErrorCode::BadParams, "room size must be positive");
  if (n < 0) fail(ErrorCode::BadParams, "negative node count");
  for (Room& r : rooms) {
    if (static_cast<int>(r.size()) != d) {
      fail(ErrorCode::BadParams, "room " + room_name(r) + " does not have " + std::to_string(d) + " nodes");
    }
    std::sort(r.begin(), r.end());
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k] < 1 || r[k] > n) fail(ErrorCode::BadParams, "node " + std::to_string(r[k]) + " out of range");
      if (k && r[k] == r[k - 1]) fail(ErrorCode::BadParams, "room " + room_name(r) + " repeats a node");
    }
  }
  return Oik{d, n, std::move(rooms)};
}

OikReport validate_oik(const Oik& oik) {
  OikReport rep;
  rep.is_oik = true;
  rep.is_manifold = true;
  for (const auto& [wall, inc] : walls(oik)) {
    if (inc.size() % 2 != 0) {
      rep.is_oik = false;
      rep.is_manifold = false;
      if (!rep.offending_wall) rep.offending_wall = wall;
    } else if (inc.size() != 2) {
      rep.is_manifold = false;
    }
  }
  return rep;
}

bool is_coherent(const Oik& oik, const std::vector<Sign>& sigma) {
  if (sigma.size() != oik.rooms.size()) return false;
  for (const auto& [wall, inc] : walls(oik)) {
    int total = 0;
    for (const Incidence& x : inc) total += induced_orientation(sigma[x.room], x.pos).value();
    if (total != 0) return false;
  }
  return true;
}

OrientedOik orient_and_pair(const Oik& oik, std::optional<std::vector<Sign>> sigma) {
  const OikReport rep = validate_oik(oik);
  if (!rep.is_oik) fail(ErrorCode::BadParams, "wall " + room_name(*rep.offending_wall) + " lies in an odd number of rooms");
  OrientedOik out{oik, {}, {}};
  if (sigma) {
    if (!is_coherent(oik, *sigma)) fail(ErrorCode::IncoherentOrientation, "orientation is not coherent");
    out.sigma = std::move(*sigma);
  } else if (oik.d == 2) {
    out.sigma = eulerian_orientation(oik);
  } else if (rep.is_manifold) {
    out.sigma = propagate_orientation(oik, walls(oik));
  } else {
    fail(ErrorCode::NeedExplicitOrientation, "oik is neither a manifold nor of dimension 2");
  }
  if (oik.d == 2) {
    out.partner = tour_pairing(oik, oriented_digraph(oik, out.sigma));
  } else {
    out.partner = empty_partner(oik);
    zip_pairing(walls(oik), out.sigma, out.partner);
  }
  return out;
}

OrientedOik digraph_oik(const Digraph& g) {
  std::vector<Room> rooms;
  std::vector<Sign> sigma;
  for (const Edge& e : g.edges()) {
    rooms.push_back({std::min(e.tail, e.head), std::max(e.tail, e.head)});
    sigma.push_back(e.tail < e.head ? Sign::plus() : Sign::minus());
  }
  Oik oik{2, g.node_count(), std::move(rooms)};
  auto partner = tour_pairing(oik, g);
  return OrientedOik{std::move(oik), std::move(sigma), std::move(partner)};
}

std::optional<int> find_room(const Oik& oik, Room nodes) {
  std::sort(nodes.begin(), nodes.end());
  for (std::size_t r = 0; r < oik.rooms.size(); ++r) {
    if (oik.rooms[r] == nodes) return static_cast<int>(r);
  }
  return std::nullopt;
}

OrientedOik oik_sum(const std::vector<OrientedOik>& family) {
  if (family.empty()) fail(ErrorCode::BadParams, "empty oik family");
  const int n = family[0].n();
  std::uint64_t count = 1;
  int d = 0;
  for (const OrientedOik& o : family) {
    if (o.n() != n) fail(ErrorCode::MixedUniverse, "oiks over different node sets");
    count = saturating_mul(count, o.size());
    d += o.d();
  }
  if (count > 1'000'000) fail(ErrorCode::TooLarge, "oik-sum has more than 10^6 rooms");
  const int h = static_cast<int>(family.size());

  // Mixed radix over room tuples, last oik fastest, which is lexicographic.
  std::vector<std::uint64_t> stride(h, 1);
  for (int p = h - 2; p >= 0; --p) stride[p] = stride[p + 1] * family[p + 1].size();

  OrientedOik out;
  out.oik.d = d;
  out.oik.n = h * n;
  out.oik.rooms.reserve(count);
  out.sigma.reserve(count);
  out.partner.reserve(count);
  std::vector<int> t(h, 0);
  for (std::uint64_t id = 0; id < count; ++id) {
    std::uint64_t rest = id;
    for (int p = 0; p < h; ++p) {
      t[p] = static_cast<int>(rest / stride[p]);
      rest %= stride[p];
    }
    Room room;
    std::vector<int> partner;
    for (int p = 0; p < h; ++p) {
      const std::uint64_t base = id - static_cast<std::uint64_t>(t[p]) * stride[p];
      for (int k = 0; k < family[p].d(); ++k) {
        room.push_back(p * n + family[p].room(t[p])[k]);
        const int q = family[p].partner[t[p]][k];
        partner.push_back(q < 0 ? -1 : static_cast<int>(base + static_cast<std::uint64_t>(q) * stride[p]));
      }
    }
    out.oik.rooms.push_back(std::move(room));
    out.sigma.push_back(product_orientation(family, t));
    out.partner.push_back(std::move(partner));
  }
  return out;
}

Sign partition_sign(const std::vector<OrientedOik>& family, const std::vector<int>& partition) {
  check_partition(family, partition);
  std::vector<int> seq;
  for (std::size_t p = 0; p < family.size(); ++p) {
    const Room& r = family[p].room(partition[p]);
    seq.insert(seq.end(), r.begin(), r.end());
  }
  return product_orientation(family, partition) * permutation_parity(seq);
}

std::vector<std::vector<int>> enumerate_partitions(const std::vector<OrientedOik>& family, bool unordered, int cap) {
  std::vector<std::vector<int>> out;
  if (family.empty()) return out;
  const int n = family[0].n();
  if (n > cap) fail(ErrorCode::TooLarge, "node set larger than " + std::to_string(cap));
  int total = 0;
  for (const OrientedOik& o : family) {
    if (o.n() != n) fail(ErrorCode::MixedUniverse, "oiks over different node sets");
    if (unordered && o.oik.rooms != family[0].oik.rooms) {
      fail(ErrorCode::BadParams, "unordered partitions need one repeated oik");
    }
    total += o.d();
  }
  if (total != n) return out;

  const int h = static_cast<int>(family.size());
  std::vector<int> choice(h, -1);
  std::vector<bool> used(n + 1, false);
  auto fits = [&](const Room& r) {
    return std::none_of(r.begin(), r.end(), [&](int v) { return used[v]; });
  };
  auto mark = [&](const Room& r, bool on) {
    for (int v : r) used[v] = on;
  };
  auto rec = [&](auto&& self, int p) -> void {
    if (p == h) {
      out.push_back(choice);
      return;
    }
    const int lo = unordered && p > 0 ? choice[p - 1] + 1 : 0;
    for (int r = lo; r < static_cast<int>(family[p].size()); ++r) {
      const Room& room = family[p].room(r);
      if (!fits(room)) continue;
      mark(room, true);
      choice[p] = r;
      self(self, p + 1);
      mark(room, false);
    }
    choice[p] = -1;
  };
  rec(rec, 0);
  return out;
}

OikSumSystem::OikSumSystem(const std::vector<OrientedOik>& family) : family_(family), n_(0), arity_(0), state_count_(1) {
  if (family.empty()) fail(ErrorCode::BadParams, "empty oik family");
  n_ = family[0].n();
  for (const OrientedOik& o : family) {
    if (o.n() != n_) fail(ErrorCode::MixedUniverse, "oiks over different node sets");
    arity_ += o.d();
    state_count_ = saturating_mul(state_count_, o.size());
  }
}

std::vector<int> OikSumSystem::representation(const State& s) const {
  std::vector<int> rep;
  rep.reserve(arity_);
  for (std::size_t p = 0; p < family_.size(); ++p) {
    for (int v : family_[p].room(s[p])) rep.push_back(static_cast<int>(p) * n_ + v);
  }
  return rep;
}

PivotStep<OikSumSystem::State> OikSumSystem::pivot(const State& s, int i) const {
  if (i < 0 || i >= arity_) fail(ErrorCode::BadPosition, "position out of range");
  std::size_t p = 0;
  int offset = 0;
  while (i >= offset + family_[p].d()) offset += family_[p++].d();
  const int k = i - offset;
  const OrientedOik& o = family_[p];
  const int next_room = o.partner[s[p]][k];
  if (next_room < 0) fail(ErrorCode::Internal, "wall without a partner room");

  PivotStep<State> step{s, std::vector<int>(arity_)};
  step.next[p] = next_room;
  std::iota(step.pi.begin(), step.pi.end(), 0);
  const Room& old_room = o.room(s[p]);
  const Room& new_room = o.room(next_room);
  const int u = entering_node(old_room, k, new_room);
  for (int j = 0; j < o.d(); ++j) step.pi[offset + j] = offset + position_of(new_room, j == k ? u : old_room[j]);
  return step;
}

Sign OikSumSystem::orientation(const State& s) const { return product_orientation(family_, s); }

std::string OikSumSystem::state_name(const State& s) const { return partition_name(family_, s); }

UnorderedOikSystem::UnorderedOikSystem(const OrientedOik& oik, int h) : oik_(oik), h_(h), state_count_(1) {
  if (h < 1) fail(ErrorCode::BadParams, "need at least one room per state");
  // multisets of size h from |rooms| rooms
  const std::uint64_t r = oik.size();
  long double c = 1;
  for (int j = 1; j <= h; ++j) c = c * static_cast<long double>(r + j - 1) / j;
  state_count_ = c >= 1.8e19L ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(c + 0.5L);
}

std::vector<int> UnorderedOikSystem::representation(const State& s) const {
  std::vector<int> rep;
  rep.reserve(static_cast<std::size_t>(arity()));
  for (int r : s) {
    const Room& room = oik_.room(r);
    rep.insert(rep.end(), room.begin(), room.end());
  }
  return rep;
}

PivotStep<UnorderedOikSystem::State> UnorderedOikSystem::pivot(const State& s, int i) const {
  if (i < 0 || i >= arity()) fail(ErrorCode::BadPosition, "position out of range");
  const int d = oik_.d();
  const int p = i / d;
  const int k = i % d;
  const int next_room = oik_.partner[s[p]][k];
  if (next_room < 0) fail(ErrorCode::Internal, "wall without a partner room");

  std::vector<std::pair<int, int>> blocks;  // (room, old block)
  for (int q = 0; q < h_; ++q) blocks.emplace_back(q == p ? next_room : s[q], q);
  std::stable_sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> new_pos(h_);
  PivotStep<State> step{State(h_), std::vector<int>(arity())};
  for (int q = 0; q < h_; ++q) {
    step.next[q] = blocks[q].first;
    new_pos[blocks[q].second] = q;
  }
  const Room& old_room = oik_.room(s[p]);
  const Room& new_room = oik_.room(next_room);
  const int u = entering_node(old_room, k, new_room);
  for (int q = 0; q < h_; ++q) {
    for (int j = 0; j < d; ++j) {
      const int at = q != p ? j : position_of(new_room, j == k ? u : old_room[j]);
      step.pi[q * d + j] = new_pos[q] * d + at;
    }
  }
  return step;
}

Sign UnorderedOikSystem::orientation(const State& s) const {
  Sign sg = Sign::plus();
  for (int r : s) sg *= oik_.sigma.at(r);
  return sg;
}

std::string UnorderedOikSystem::state_name(const State& s) const {
  std::string out = "{";
  for (std::size_t q = 0; q < s.size(); ++q) {
    if (q) out += ',';
    out += room_name(oik_.room(s[q]));
  }
  return out + "}";
}

ExchangeResult exchange_path(const std::vector<OrientedOik>& family, const std::vector<int>& partition, int w,
                             PathOptions options) {
  check_partition(family, partition);
  OikSumSystem sys(family);
  return collect(follow_path(sys, partition, w, options), true);
}

ExchangeResult exchange_path_unordered(const OrientedOik& oik, int h, const std::vector<int>& partition, int w,
                                       PathOptions options) {
  check_partition(std::vector<OrientedOik>(static_cast<std::size_t>(h), oik), partition);
  std::vector<int> start = partition;
  std::sort(start.begin(), start.end());
  UnorderedOikSystem sys(oik, h);
  if (oik.d() % 2 == 0) return collect(follow_path(sys, start, w, options), true);
  Unoriented<UnorderedOikSystem> plain(sys);
  return collect(follow_path(plain, start, w, options), false);
}

Matching exchange_matching(const Digraph& g, int w, PathOptions options) {
  if (!is_perfect_matching(g, g.matched())) fail(ErrorCode::NotPerfectMatching, "matched edges are not perfect");
  if (!is_eulerian(g)) fail(ErrorCode::NotEulerian, "digraph is not Eulerian");
  const OrientedOik oik = digraph_oik(g);
  std::vector<int> start;
  for (EdgeIndex e : g.matched()) start.push_back(static_cast<int>(e));
  const auto result = exchange_path_unordered(oik, static_cast<int>(start.size()), start, w, options);
  std::vector<EdgeIndex> edges(result.end.begin(), result.end.end());
  return Matching(std::move(edges));
}

Oik sperner_oik(const std::vector<int>& labels, int m) {
  const int n = static_cast<int>(labels.size());
  if (m < 1) fail(ErrorCode::BadParams, "label count must be positive");
  if (n - m < 2) fail(ErrorCode::BadParams, "need at least m + 2 nodes for rooms of size 2 or more");
  std::vector<std::vector<int>> by_label(m + 1);
  for (int v = 1; v <= n; ++v) {
    const int l = labels[v - 1];
    if (l < 1 || l > m) fail(ErrorCode::BadParams, "label " + std::to_string(l) + " out of range");
    by_label[l].push_back(v);
  }
  for (int l = 1; l <= m; ++l) {
    if (by_label[l].empty()) fail(ErrorCode::NotSurjective, "label " + std::to_string(l) + " is unused");
  }
  std::vector<Room> rooms;
  std::vector<int> pick(m + 1, 0);
  for (;;) {
    std::vector<bool> in_cl(n + 1, false);
    for (int l = 1; l <= m; ++l) in_cl[by_label[l][pick[l]]] = true;
    Room room;
    for (int v = 1; v <= n; ++v) {
      if (!in_cl[v]) room.push_back(v);
    }
    rooms.push_back(std::move(room));
    int l = m;
    while (l >= 1 && ++pick[l] == static_cast<int>(by_label[l].size())) pick[l--] = 0;
    if (l == 0) break;
  }
  std::sort(rooms.begin(), rooms.end());
  return Oik{n - m, n, std::move(rooms)};
}

OikFile parse_oik(std::istream& in) {
  const auto lines = detail::read_token_lines(in);
  if (lines.empty()) detail::parse_fail(0, "empty input");
  detail::expect_header(lines[0], "oik", 2);
  const long long d = detail::parse_integer(lines[0].tokens[1], lines[0].line_no);
  const long long r = detail::parse_integer(lines[0].tokens[2], lines[0].line_no);
  if (d < 1 || d > 64) detail::parse_fail(lines[0].line_no, "room size out of range");
  if (r < 0) detail::parse_fail(lines[0].line_no, "negative room count");
  if (static_cast<long long>(lines.size()) - 1 != r) {
    detail::parse_fail(lines.back().line_no, "expected " + std::to_string(r) + " rooms");
  }
  std::vector<Room> rooms;
  std::vector<Sign> sigma;
  int with_sign = 0;
  int n = 0;
  for (std::size_t j = 1; j < lines.size(); ++j) {
    const auto& tl = lines[j];
    const std::size_t count = tl.tokens.size();
    if (count != static_cast<std::size_t>(d) && count != static_cast<std::size_t>(d) + 1) {
      detail::parse_fail(tl.line_no, "expected " + std::to_string(d) + " nodes and an optional orientation");
    }
    Room room;
    for (long long k = 0; k < d; ++k) {
      const long long v = detail::parse_integer(tl.tokens[k], tl.line_no);
      if (v < 1 || v > 1'000'000) detail::parse_fail(tl.line_no, "node id out of range");
      room.push_back(static_cast<int>(v));
      n = std::max(n, static_cast<int>(v));
    }
    if (!std::is_sorted(room.begin(), room.end()) || std::adjacent_find(room.begin(), room.end()) != room.end()) {
      detail::parse_fail(tl.line_no, "room nodes must be strictly ascending");
    }
    if (count == static_cast<std::size_t>(d) + 1) {
      const std::string& t = tl.tokens.back();
      if (t != "+1" && t != "-1" && t != "1") detail::parse_fail(tl.line_no, "orientation must be +1 or -1");
      sigma.push_back(t == "-1" ? Sign::minus() : Sign::plus());
      ++with_sign;
    }
    rooms.push_back(std::move(room));
  }
  if (with_sign != 0 && with_sign != r) detail::parse_fail(lines[0].line_no, "orientation given on some rooms only");
  OikFile out{make_oik(static_cast<int>(d), n, std::move(rooms)), std::nullopt};
  if (with_sign) out.sigma = std::move(sigma);
  return out;
}

OikFile parse_oik(const std::string& text) {
  std::istringstream in(text);
  return parse_oik(in);
}

std::string format_oik(const Oik& oik, const std::vector<Sign>* sigma) {
  std::ostringstream os;
  os << "oik " << oik.d << ' ' << oik.rooms.size() << '\n';
  for (std::size_t r = 0; r < oik.rooms.size(); ++r) {
    for (std::size_t k = 0; k < oik.rooms[r].size(); ++k) os << (k ? " " : "") << oik.rooms[r][k];
    if (sigma) os << ' ' << to_string(sigma->at(r));
    os << '\n';
  }
  return os.str();
}

}  // namespace eulerpiv

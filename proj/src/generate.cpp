#include "eulerpiv/generate.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace eulerpiv {

namespace {

// k distinct nodes of 1..m in random order.
std::vector<Node> sample_distinct(int m, int k, Rng& rng) {
  std::vector<Node> out;
  if (4 * k > m) {
    std::vector<Node> all(m);
    std::iota(all.begin(), all.end(), 1);
    shuffle(all, rng);
    out.assign(all.begin(), all.begin() + k);
    return out;
  }
  while (static_cast<int>(out.size()) < k) {
    const Node v = static_cast<Node>(uniform_int(rng, 1, m));
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

void add_cycle(std::vector<std::pair<Edge, bool>>& edges, const std::vector<Node>& cycle) {
  for (std::size_t k = 0; k < cycle.size(); ++k) edges.push_back({{cycle[k], cycle[(k + 1) % cycle.size()]}, false});
}

Digraph shuffled(int m, std::vector<std::pair<Edge, bool>> edges, Rng& rng) {
  shuffle(edges, rng);
  std::vector<Edge> plain;
  std::vector<EdgeIndex> matched;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    plain.push_back(edges[e].first);
    if (edges[e].second) matched.push_back(e);
  }
  return Digraph(m, std::move(plain), std::move(matched));
}

void add_matched_pair(std::vector<std::pair<Edge, bool>>& edges, Node u, Node v, Rng& rng) {
  if (uniform_below(rng, 2)) std::swap(u, v);
  edges.push_back({{u, v}, true});
  edges.push_back({{v, u}, false});
}

void check_even(int m) {
  if (m < 2 || m % 2 != 0) fail(ErrorCode::BadParams, "node count must be even and positive");
}

Oik grid_oik(int p, int q, bool twisted) {
  if (p < 3 || q < 3) fail(ErrorCode::BadParams, "grid needs at least 3 x 3 vertices");
  auto id = [&](int i, int j) {
    while (i >= p) {
      i -= p;
      if (twisted) j = -j;
    }
    j = ((j % q) + q) % q;
    return i * q + j + 1;
  };
  std::vector<Room> rooms;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      const int a = id(i, j), b = id(i + 1, j), c = id(i, j + 1), d = id(i + 1, j + 1);
      rooms.push_back({a, b, d});
      rooms.push_back({a, c, d});
    }
  }
  return make_oik(3, p * q, std::move(rooms));
}

}  // namespace

Digraph random_euler_instance(int m, int extra_cycles, Rng& rng) {
  check_even(m);
  std::vector<Node> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  shuffle(perm, rng);
  std::vector<std::pair<Edge, bool>> edges;
  for (int k = 0; k < m; k += 2) add_matched_pair(edges, perm[k], perm[k + 1], rng);
  for (int c = 0; c < extra_cycles; ++c) {
    const int len = static_cast<int>(uniform_int(rng, 2, m));
    add_cycle(edges, sample_distinct(m, len, rng));
  }
  return shuffled(m, std::move(edges), rng);
}

Digraph random_bipartite_instance(int m, int extra_cycles, Rng& rng) {
  check_even(m);
  const int half = m / 2;
  std::vector<Node> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  shuffle(perm, rng);
  std::vector<Node> left(perm.begin(), perm.begin() + half);
  std::vector<Node> right(perm.begin() + half, perm.end());
  std::vector<std::pair<Edge, bool>> edges;
  for (int k = 0; k < half; ++k) add_matched_pair(edges, left[k], right[k], rng);
  for (int c = 0; c < extra_cycles; ++c) {
    const int t = static_cast<int>(uniform_int(rng, 1, half));
    std::vector<Node> ls = left, rs = right;
    shuffle(ls, rng);
    shuffle(rs, rng);
    std::vector<Node> cycle;
    for (int k = 0; k < t; ++k) {
      cycle.push_back(ls[k]);
      cycle.push_back(rs[k]);
    }
    add_cycle(edges, cycle);
  }
  return shuffled(m, std::move(edges), rng);
}

Digraph bench_instance(std::size_t edges_wanted, Rng& rng) {
  int m = static_cast<int>(edges_wanted / 2) & ~1;
  m = std::max(m, 4);
  std::vector<Node> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  shuffle(perm, rng);
  std::vector<std::pair<Edge, bool>> edges;
  edges.reserve(std::max<std::size_t>(edges_wanted, static_cast<std::size_t>(m)));
  // one long alternating cycle, so the search cannot stop early on a 2-cycle
  for (int k = 0; k < m; ++k) edges.push_back({{perm[k], perm[(k + 1) % m]}, k % 2 == 0});
  while (edges.size() + 3 <= edges_wanted) {
    int len = static_cast<int>(uniform_int(rng, 3, 8));
    len = std::min<int>({len, m, static_cast<int>(edges_wanted - edges.size())});
    add_cycle(edges, sample_distinct(m, len, rng));
  }
  return shuffled(m, std::move(edges), rng);
}

Digraph random_simple_digraph(int m, Rng& rng) {
  if (m < 1) fail(ErrorCode::BadParams, "node count must be positive");
  Digraph g(m);
  for (Node u = 1; u <= m; ++u) {
    for (Node v = u + 1; v <= m; ++v) {
      if (!uniform_below(rng, 2)) continue;
      if (uniform_below(rng, 2)) {
        g.add_edge(u, v);
      } else {
        g.add_edge(v, u);
      }
    }
  }
  return g;
}

OikFile random_two_oik(int n, int cycles, Rng& rng) {
  if (n < 2) fail(ErrorCode::BadParams, "need at least 2 nodes");
  std::vector<Room> rooms;
  std::vector<Sign> sigma;
  for (int c = 0; c < cycles; ++c) {
    const int len = static_cast<int>(uniform_int(rng, 2, n));
    const std::vector<Node> cycle = sample_distinct(n, len, rng);
    const bool reversed = uniform_below(rng, 2) != 0;
    for (int k = 0; k < len; ++k) {
      Node a = cycle[k], b = cycle[(k + 1) % len];
      if (reversed) std::swap(a, b);
      rooms.push_back({std::min(a, b), std::max(a, b)});
      sigma.push_back(a < b ? Sign::plus() : Sign::minus());
    }
  }
  return OikFile{make_oik(2, n, std::move(rooms)), std::move(sigma)};
}

UnitVectorGame random_unit_vector_game(int m, int rows, int max_entry, Rng& rng) {
  if (m < 1 || rows < 1 || max_entry < 1) fail(ErrorCode::BadParams, "bad game dimensions");
  UnitVectorGame game{RationalMatrix(rows, m), {}};
  for (int c = 0; c < m; ++c) {
    bool positive = false;
    while (!positive) {
      for (int r = 0; r < rows; ++r) {
        const auto v = uniform_int(rng, 0, max_entry);
        game.C(r, c) = Rational(v);
        positive = positive || v > 0;
      }
    }
  }
  for (int r = 0; r < rows; ++r) game.labels.push_back(static_cast<int>(uniform_int(rng, 1, m)));
  return game;
}

GaleLabeling random_gale_labeling(int m, int n, Rng& rng) {
  if (m < 2 || n < 2) fail(ErrorCode::BadParams, "need m >= 2 and n >= 2");
  if (m == 2 && n % 2 == 1) fail(ErrorCode::BadParams, "an odd cycle has no loop-free 2-labeling");
  std::vector<int> labels(n);
  for (;;) {
    for (int& l : labels) l = static_cast<int>(uniform_int(rng, 1, m));
    bool loop = false;
    for (int j = 0; j < n && !loop; ++j) loop = labels[j] == labels[(j + 1) % n];
    if (!loop) return GaleLabeling{m, labels};
  }
}

OikFile octahedron_oik() {
  Oik oik = make_oik(3, 6, {{1, 2, 3}, {1, 4, 5}, {1, 2, 4}, {1, 3, 5}, {4, 5, 6}, {2, 3, 6}, {3, 5, 6}, {2, 4, 6}});
  const auto p = Sign::plus(), n = Sign::minus();
  return OikFile{std::move(oik), std::vector<Sign>{p, n, n, p, p, n, n, p}};
}

Oik klein_bottle_oik(int p, int q) { return grid_oik(p, q, true); }

Oik torus_oik(int p, int q) { return grid_oik(p, q, false); }

Digraph four_cycle() { return Digraph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}, {0, 2}); }

Digraph left_four_node_graph() { return four_cycle(); }

Digraph right_four_node_graph() {
  return Digraph(4, {{1, 2}, {3, 4}, {1, 3}, {2, 4}, {4, 1}, {4, 1}}, {0, 1});
}

}  // namespace eulerpiv

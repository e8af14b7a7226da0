#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "eulerpiv/graph.hpp"
#include "eulerpiv/oik.hpp"

namespace eulerpiv::testing {

// O(n^2) inversion count, kept apart from permutation_parity on purpose.
inline int inversion_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) inv += seq[i] > seq[j];
  }
  return inv % 2 == 0 ? 1 : -1;
}

inline int naive_matching_sign(const Digraph& g, const Matching& M) {
  std::vector<int> seq;
  for (EdgeIndex e : M) {
    seq.push_back(g.edge(e).tail);
    seq.push_back(g.edge(e).head);
  }
  return inversion_sign(seq);
}

inline bool covers_every_node_once(const Digraph& g, const Matching& M) {
  std::vector<int> hit(g.node_count() + 1, 0);
  for (EdgeIndex e : M) {
    ++hit[g.edge(e).tail];
    ++hit[g.edge(e).head];
  }
  return std::all_of(hit.begin() + 1, hit.end(), [](int h) { return h == 1; });
}

// Unmatched edges a..h are 0..7, then the matched edges 61, 32, 87, 45.
namespace worked {
inline constexpr EdgeIndex a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, g = 6, h = 7;
inline constexpr EdgeIndex m61 = 8, m32 = 9, m87 = 10, m45 = 11;

inline Digraph graph() {
  return Digraph(8,
                 {{1, 2}, {2, 3}, {3, 4}, {5, 6}, {2, 7}, {7, 3}, {7, 3}, {3, 8},
                  {6, 1}, {3, 2}, {8, 7}, {4, 5}},
                 {m61, m32, m87, m45});
}
}  // namespace worked

inline std::set<Room> room_set(const Oik& oik) { return {oik.rooms.begin(), oik.rooms.end()}; }

}  // namespace eulerpiv::testing

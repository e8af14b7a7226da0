#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "eulerpiv/common.hpp"

namespace eulerpiv {

/// Nodes of a digraph are the integers 1..m.
using Node = int;
/// Stable index of an edge in Digraph::edges(); parallel edges stay distinct.
using EdgeIndex = std::size_t;

struct Edge {
  Node tail = 0;
  Node head = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A set of edge indices, kept sorted ascending without repeats.
class Matching {
 public:
  Matching() = default;
  /// Sorts; throws DuplicateEntry on a repeated index.
  explicit Matching(std::vector<EdgeIndex> edges);

  const std::vector<EdgeIndex>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(EdgeIndex e) const;

  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<EdgeIndex> edges_;
};

/// Multigraph with oriented edges over nodes 1..m and an optional set of
/// matched edges. Loops are rejected; parallel edges are allowed.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int node_count);
  Digraph(int node_count, std::vector<Edge> edges, std::vector<EdgeIndex> matched = {});

  EdgeIndex add_edge(Node tail, Node head, bool matched = false);

  int node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }

  const Matching& matched() const { return matched_; }
  bool is_matched(EdgeIndex e) const { return matched_.contains(e); }
  /// Replaces the matched set (indices must be in range; no perfection check).
  void set_matched(Matching m);

  std::vector<int> out_degrees() const;  // indexed by node, entry 0 unused
  std::vector<int> in_degrees() const;

 private:
  void check_edge(Node tail, Node head) const;

  int node_count_ = 0;
  std::vector<Edge> edges_;
  Matching matched_;
};

struct InstanceReport {
  bool eulerian = false;
  bool perfect_matching = false;
  bool m_even = false;
  friend bool operator==(const InstanceReport&, const InstanceReport&) = default;
};

/// Report-only check of the Euler property and of the matched flags.
InstanceReport validate_instance(const Digraph& g);

bool is_eulerian(const Digraph& g);
bool is_perfect_matching(const Digraph& g, const Matching& M);

/// Parity of a sequence of distinct integers read as a permutation of its
/// sorted values; linear time when the entries form a contiguous range.
/// Throws DuplicateEntry on repeated entries.
Sign permutation_parity(std::span<const int> seq);

/// Parity of the node sequence obtained by writing every matched edge as
/// (tail, head), edges in ascending index order. Throws NotPerfectMatching.
Sign matching_sign(const Digraph& g, const Matching& M);

/// For every edge e, `next[e]` is the outgoing edge at head(e) that e is
/// paired with; `prev` is the inverse map. A bijection between in- and
/// out-edges at each node.
struct Pairing {
  std::vector<EdgeIndex> next;
  std::vector<EdgeIndex> prev;
};

/// Euler tours by Hierholzer's method, one closed tour per connected component
/// that has edges. Throws NotEulerian.
std::vector<std::vector<EdgeIndex>> euler_tours(const Digraph& g);

/// Pairs each edge with its successor in the Euler tour of its component.
/// Throws NotEulerian (also for a graph without edges).
Pairing euler_pairing(const Digraph& g);

/// M xor C for an alternating cycle set C. Throws NotAlternating unless every
/// node touched by C meets exactly one edge of C in M and one outside M.
Matching symmetric_difference(const Digraph& g, const Matching& M, std::span<const EdgeIndex> C);

// Text format:
//   euler <m> <k>
//   <tail> <head> <M|U>      (k lines)
// '#' starts a comment.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
std::string format_digraph(const Digraph& g);
std::string to_dot(const Digraph& g, const Matching* highlight = nullptr);

}  // namespace eulerpiv

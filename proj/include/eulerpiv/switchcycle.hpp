#pragma once

// Oppositely signed perfect matchings in Euler digraphs by contraction of
// unmatched/matched edge pairs and deletion of unmatched cycles, plus the
// linear-time walk for bipartite graphs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eulerpiv/dsu.hpp"
#include "eulerpiv/graph.hpp"

namespace eulerpiv {

struct SwitchOptions {
  /// Matched edge used at the first restart instead of the roster head.
  std::optional<EdgeIndex> start;
  bool trace = false;
  /// Maintain sleep times and check the class invariants after every step.
  bool debug_invariants = false;
};

struct OpCounters {
  std::uint64_t finds = 0;
  std::uint64_t parent_steps = 0;
  std::uint64_t unites = 0;
  std::uint64_t edge_visits = 0;
  std::uint64_t list_ops = 0;
  std::uint64_t shrinks = 0;
  std::uint64_t discarded_edges = 0;
  std::uint64_t restarts = 0;

  std::uint64_t total() const { return finds + parent_steps + unites + edge_visits + list_ops; }
};

/// An unmatched edge together with the matched edge it is exchanged with.
struct CyclePair {
  EdgeIndex unmatched;
  EdgeIndex matched;
  friend bool operator==(const CyclePair&, const CyclePair&) = default;
};

struct SwitchResult {
  Matching matching;
  std::vector<CyclePair> cycle;
  OpCounters ops;
  std::vector<std::string> trace;
  std::uint64_t invariant_checks = 0;
};

/// Working state of the contraction algorithm. Nodes are the original node
/// ids; representatives are obtained through find().
class SwitchCycleState {
 public:
  /// Throws NotEulerian or NotPerfectMatching.
  SwitchCycleState(const Digraph& g, const Matching& M, SwitchOptions options = {});

  SwitchResult run();

  // Individual steps, exposed for inspection.
  void shrink(EdgeIndex e, EdgeIndex m);
  void checkvisited(Node W);
  std::vector<CyclePair> expand_cycle(EdgeIndex e, EdgeIndex m) const;
  void check_invariants();

  Node find(Node x);
  std::vector<EdgeIndex> outlist(Node rep) const;
  std::vector<EdgeIndex> inlist(Node rep) const;
  std::vector<EdgeIndex> roster() const;
  EdgeIndex matched_of(Node rep) const;
  std::optional<EdgeIndex> partner(EdgeIndex m) const;
  int sleeptime(Node rep) const { return sleeptime_[rep]; }
  int vc() const { return vc_; }
  std::vector<Node> visitednode() const;
  std::vector<EdgeIndex> visitededge() const;
  const DisjointSets& dsu() const { return dsu_; }
  OpCounters counters() const;

 private:
  using Ref = std::uint32_t;  // arena slot, 0 is null

  struct EdgeRec {
    Ref nextout = 0, prevout = 0, nextin = 0, previn = 0;
    Node tail = 0, head = 0;
    Ref partner = 0;
  };

  Ref edge_ref(EdgeIndex e) const { return static_cast<Ref>(e + 1); }
  EdgeIndex edge_index(Ref r) const { return static_cast<EdgeIndex>(r - 1); }
  Ref sentinel(Node v) const { return static_cast<Ref>(edge_count_ + v); }
  Ref roster_sentinel() const { return static_cast<Ref>(edge_count_ + node_count_ + 1); }

  void out_push_back(Ref s, Ref e);
  void in_push_back(Ref s, Ref e);
  void out_remove(Ref e);
  void in_remove(Ref e);
  void out_splice(Ref to, Ref from);
  void in_splice(Ref to, Ref from);
  void roster_remove(Ref m);

  void enter_b(Node V);
  void record_trace();

  const Digraph& graph_;
  Matching initial_;
  SwitchOptions options_;
  std::size_t edge_count_;
  int node_count_;

  std::vector<EdgeRec> arena_;
  DisjointSets dsu_;
  std::vector<Ref> matched_;
  std::vector<Ref> origmatched_;
  std::vector<int> visited_;
  std::vector<int> sleeptime_;
  int sleepcounter_ = 0;
  std::vector<Node> visitednode_;  // 1-based
  std::vector<Ref> visitededge_;   // 1-based
  int vc_ = 0;

  OpCounters ops_;
  std::vector<std::string> trace_;
  std::uint64_t invariant_checks_ = 0;
};

SwitchResult find_opposite_matching(const Digraph& g, const Matching& M, SwitchOptions options = {});

struct BipartiteResult {
  Matching matching;
  std::vector<EdgeIndex> cycle;
  std::size_t node_visits = 0;
};

/// Walks matched edges and co-directed unmatched edges from `start` until an
/// even-position node repeats. Throws NotBipartite, SourceOrSink,
/// NotPerfectMatching.
BipartiteResult bipartite_opposite_matching(const Digraph& g, const Matching& M, Node start = 1);

/// "cycle: (e,m) (e,m) ...".
std::string format_cycle(const std::vector<CyclePair>& cycle);

}  // namespace eulerpiv

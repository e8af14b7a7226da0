#include "eulerpiv/switchcycle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace eulerpiv {

SwitchCycleState::SwitchCycleState(const Digraph& g, const Matching& M, SwitchOptions options)
    : graph_(g),
      initial_(M),
      options_(options),
      edge_count_(g.edge_count()),
      node_count_(g.node_count()),
      arena_(g.edge_count() + g.node_count() + 2),
      dsu_(g.node_count()),
      matched_(g.node_count() + 1, 0),
      origmatched_(g.node_count() + 1, 0),
      visited_(g.node_count() + 1, 0),
      sleeptime_(g.node_count() + 1, 0),
      visitednode_(g.node_count() + 2, 0),
      visitededge_(g.node_count() + 2, 0) {
  if (!is_eulerian(g)) fail(ErrorCode::NotEulerian, "indegree differs from outdegree");
  if (!is_perfect_matching(g, M)) fail(ErrorCode::NotPerfectMatching, "matching is not perfect");
  if (options_.start && !M.contains(*options_.start)) {
    fail(ErrorCode::BadParams, "start edge " + std::to_string(*options_.start) + " is not matched");
  }

  for (Node v = 1; v <= node_count_; ++v) {
    EdgeRec& s = arena_[sentinel(v)];
    s.nextout = s.prevout = s.nextin = s.previn = sentinel(v);
    dsu_.makeset(v);
  }
  EdgeRec& rs = arena_[roster_sentinel()];
  rs.nextin = rs.previn = roster_sentinel();

  for (EdgeIndex e = 0; e < edge_count_; ++e) {
    EdgeRec& rec = arena_[edge_ref(e)];
    rec.tail = g.edge(e).tail;
    rec.head = g.edge(e).head;
    if (M.contains(e)) {
      matched_[rec.tail] = matched_[rec.head] = edge_ref(e);
      in_push_back(roster_sentinel(), edge_ref(e));
    } else {
      out_push_back(sentinel(rec.tail), edge_ref(e));
      in_push_back(sentinel(rec.head), edge_ref(e));
    }
  }
  origmatched_ = matched_;
  ops_.list_ops = 0;
}

void SwitchCycleState::out_push_back(Ref s, Ref e) {
  EdgeRec& S = arena_[s];
  arena_[e].prevout = S.prevout;
  arena_[e].nextout = s;
  arena_[S.prevout].nextout = e;
  S.prevout = e;
  ++ops_.list_ops;
}

void SwitchCycleState::in_push_back(Ref s, Ref e) {
  EdgeRec& S = arena_[s];
  arena_[e].previn = S.previn;
  arena_[e].nextin = s;
  arena_[S.previn].nextin = e;
  S.previn = e;
  ++ops_.list_ops;
}

void SwitchCycleState::out_remove(Ref e) {
  EdgeRec& E = arena_[e];
  arena_[E.prevout].nextout = E.nextout;
  arena_[E.nextout].prevout = E.prevout;
  E.nextout = E.prevout = 0;
  ++ops_.list_ops;
}

void SwitchCycleState::in_remove(Ref e) {
  EdgeRec& E = arena_[e];
  arena_[E.previn].nextin = E.nextin;
  arena_[E.nextin].previn = E.previn;
  E.nextin = E.previn = 0;
  ++ops_.list_ops;
}

void SwitchCycleState::roster_remove(Ref m) { in_remove(m); }

void SwitchCycleState::out_splice(Ref to, Ref from) {
  EdgeRec& F = arena_[from];
  if (F.nextout == from) return;
  const Ref first = F.nextout, last = F.prevout;
  const Ref tail = arena_[to].prevout;
  arena_[tail].nextout = first;
  arena_[first].prevout = tail;
  arena_[last].nextout = to;
  arena_[to].prevout = last;
  F.nextout = F.prevout = from;
  ++ops_.list_ops;
}

void SwitchCycleState::in_splice(Ref to, Ref from) {
  EdgeRec& F = arena_[from];
  if (F.nextin == from) return;
  const Ref first = F.nextin, last = F.previn;
  const Ref tail = arena_[to].previn;
  arena_[tail].nextin = first;
  arena_[first].previn = tail;
  arena_[last].nextin = to;
  arena_[to].previn = last;
  F.nextin = F.previn = from;
  ++ops_.list_ops;
}

Node SwitchCycleState::find(Node x) { return dsu_.find(x); }

std::vector<EdgeIndex> SwitchCycleState::outlist(Node rep) const {
  std::vector<EdgeIndex> out;
  for (Ref r = arena_[sentinel(rep)].nextout; r != sentinel(rep); r = arena_[r].nextout) {
    out.push_back(edge_index(r));
  }
  return out;
}

std::vector<EdgeIndex> SwitchCycleState::inlist(Node rep) const {
  std::vector<EdgeIndex> in;
  for (Ref r = arena_[sentinel(rep)].nextin; r != sentinel(rep); r = arena_[r].nextin) {
    in.push_back(edge_index(r));
  }
  return in;
}

std::vector<EdgeIndex> SwitchCycleState::roster() const {
  std::vector<EdgeIndex> live;
  for (Ref r = arena_[roster_sentinel()].nextin; r != roster_sentinel(); r = arena_[r].nextin) {
    live.push_back(edge_index(r));
  }
  return live;
}

EdgeIndex SwitchCycleState::matched_of(Node rep) const { return edge_index(matched_[rep]); }

std::optional<EdgeIndex> SwitchCycleState::partner(EdgeIndex m) const {
  const Ref p = arena_[edge_ref(m)].partner;
  if (p == 0) return std::nullopt;
  return edge_index(p);
}

std::vector<Node> SwitchCycleState::visitednode() const {
  return {visitednode_.begin() + 1, visitednode_.begin() + 1 + vc_};
}

std::vector<EdgeIndex> SwitchCycleState::visitededge() const {
  std::vector<EdgeIndex> edges;
  for (int i = 1; i < vc_; ++i) edges.push_back(edge_index(visitededge_[i]));
  return edges;
}

OpCounters SwitchCycleState::counters() const {
  OpCounters c = ops_;
  c.finds = dsu_.counters().finds;
  c.parent_steps = dsu_.counters().parent_steps;
  c.unites = dsu_.counters().unites;
  return c;
}

void SwitchCycleState::shrink(EdgeIndex ei, EdgeIndex mi) {
  const Ref e = edge_ref(ei), m = edge_ref(mi);
  const EdgeRec& E = arena_[e];
  const EdgeRec& Mr = arena_[m];
  const Node U = find(E.tail);
  const Node W = find(Mr.head);
  const Node V = find(E.head);
  if (E.nextout == 0 || !initial_.contains(mi) || Mr.nextin == 0 || find(Mr.tail) != V ||
      matched_[V] != m || arena_[sentinel(V)].nextout != sentinel(V) || U == W) {
    fail(ErrorCode::PreconditionViolated,
         "shrink(" + std::to_string(ei) + "," + std::to_string(mi) + ") on an ineligible pair");
  }
  out_remove(e);
  if (options_.debug_invariants) {
    ++sleepcounter_;
    sleeptime_[V] = sleepcounter_;
  }
  arena_[m].partner = e;
  const auto [X, Y] = dsu_.unite(U, W);
  out_splice(sentinel(X), sentinel(Y));
  in_splice(sentinel(X), sentinel(Y));
  matched_[X] = matched_[U];
  roster_remove(m);
  ++ops_.shrinks;
}

void SwitchCycleState::checkvisited(Node W) {
  const int from = visited_[W];
  if (from <= 0) return;
  if (from > vc_) fail(ErrorCode::Internal, "stale visited index on node " + std::to_string(W));
  for (int i = from; i <= vc_ - 1; ++i) {
    out_remove(visitededge_[i]);
    in_remove(visitededge_[i]);
    visited_[visitednode_[i]] = 0;
    ++ops_.discarded_edges;
  }
  vc_ = from;
}

std::vector<CyclePair> SwitchCycleState::expand_cycle(EdgeIndex ei, EdgeIndex mi) const {
  std::vector<CyclePair> C{{ei, mi}};
  const EdgeRec& E = arena_[edge_ref(ei)];
  const EdgeRec& Mr = arena_[edge_ref(mi)];
  // pending reconnect(x, y) calls, last pushed runs first
  std::vector<std::pair<Node, Node>> work{{E.tail, Mr.head}, {E.head, Mr.tail}};
  while (!work.empty()) {
    const auto [x, y] = work.back();
    work.pop_back();
    if (x == y) continue;
    const Ref m = origmatched_[x];
    const Ref e = arena_[m].partner;
    if (e == 0) fail(ErrorCode::Internal, "matched edge without partner during expansion");
    C.push_back({edge_index(e), edge_index(m)});
    if (C.size() > edge_count_) fail(ErrorCode::Internal, "expansion does not terminate");
    work.push_back({arena_[e].tail, y});
    work.push_back({arena_[e].head, arena_[m].tail});
  }
  return C;
}

void SwitchCycleState::check_invariants() {
  ++invariant_checks_;
  auto violation = [](const std::string& what) { fail(ErrorCode::InvariantViolation, what); };
  std::map<Node, std::vector<Node>> classes;
  for (Node x = 1; x <= node_count_; ++x) classes[dsu_.root(x)].push_back(x);

  for (const auto& [U, members] : classes) {
    const std::string cls = "class of " + std::to_string(U) + ": ";
    const Ref mp = matched_[U];
    if (mp == 0) violation(cls + "no matched edge");
    const Node t = arena_[mp].tail, h = arena_[mp].head;
    const bool t_in = dsu_.root(t) == U, h_in = dsu_.root(h) == U;
    if (t_in == h_in) violation(cls + "matched edge does not leave the class exactly once");
    const Node u = t_in ? t : h;
    const Node z = t_in ? h : t;
    const int sU = sleeptime_[U];
    const int sZ = sleeptime_[dsu_.root(z)];
    if (sU == 0) {
      if (sZ != 0) violation(cls + "awake class matched to a sleeping node");
    } else {
      if (u != t) violation(cls + "sleeping class must hold the tail of its matched edge");
      if (sZ != 0 && sZ <= sU) violation(cls + "matched partner fell asleep earlier");
    }
    for (Node y : members) {
      if (y == u) continue;
      const std::string at = cls + "node " + std::to_string(y) + ": ";
      const Ref m = origmatched_[y];
      if (arena_[m].head != y) violation(at + "not the head of its original matched edge");
      const int sTail = sleeptime_[dsu_.root(arena_[m].tail)];
      if (sTail == 0) violation(at + "tail of original matched edge is awake");
      if (sU != 0 && sTail >= sU) violation(at + "tail fell asleep after the class");
      const Ref e = arena_[m].partner;
      if (e == 0) violation(at + "original matched edge has no partner");
      if (dsu_.root(arena_[m].tail) != dsu_.root(arena_[e].head)) {
        violation(at + "partner head not equivalent to matched tail");
      }
      const Node x = arena_[e].tail;
      if (dsu_.root(x) != U || x == y) violation(at + "partner tail outside the class or equal to it");
    }
  }

  // The reduced graph on awake classes stays Eulerian.
  for (const auto& [U, members] : classes) {
    if (sleeptime_[U] != 0) continue;
    long outdeg = static_cast<long>(outlist(U).size());
    long indeg = static_cast<long>(inlist(U).size());
    const Ref mp = matched_[U];
    if (dsu_.root(arena_[mp].tail) == U) ++outdeg;
    else ++indeg;
    if (outdeg != indeg) violation("class of " + std::to_string(U) + ": reduced graph not Eulerian");
  }
}

void SwitchCycleState::record_trace() {
  std::ostringstream os;
  os << "vc=" << vc_ << " visitednode=[";
  for (int i = 1; i <= vc_; ++i) os << (i > 1 ? " " : "") << visitednode_[i];
  os << "] visitededge=[";
  for (int i = 1; i < vc_; ++i) os << (i > 1 ? " " : "") << edge_index(visitededge_[i]);
  os << "]";
  trace_.push_back(os.str());
}

void SwitchCycleState::enter_b(Node V) {
  visitednode_[vc_] = V;
  visited_[V] = vc_;
  if (options_.trace) record_trace();
  if (options_.debug_invariants) check_invariants();
}

SwitchResult SwitchCycleState::run() {
  if (options_.debug_invariants) check_invariants();
  bool use_start = options_.start.has_value();
  const std::uint64_t guard = 4 * (edge_count_ + static_cast<std::size_t>(node_count_)) + 16;
  std::uint64_t iterations = 0;

  for (;;) {
    // step A
    Ref m = 0;
    if (use_start) {
      m = edge_ref(options_.start.value());
      use_start = false;
    } else {
      m = arena_[roster_sentinel()].nextin;
      if (m == roster_sentinel()) fail(ErrorCode::Internal, "no matched edge left");
    }
    ++ops_.restarts;
    Node V = find(arena_[m].head);
    vc_ = 1;

    bool restart = false;
    while (!restart) {
      // step B
      if (++iterations > guard) fail(ErrorCode::Internal, "main loop exceeded its work bound");
      enter_b(V);
      const Ref s = sentinel(V);
      if (arena_[s].nextout != s) {
        const Ref e = arena_[s].nextout;
        const Node W = find(arena_[e].head);
        visitededge_[vc_] = e;
        ++vc_;
        ++ops_.edge_visits;
        checkvisited(W);
        if (options_.debug_invariants) check_invariants();
        V = W;
        continue;
      }
      const Ref mV = matched_[V];
      const Node W = find(arena_[mV].head);
      if (vc_ <= 1) fail(ErrorCode::Internal, "path start has no unmatched out-edge");
      --vc_;
      const Node U = visitednode_[vc_];
      const Ref e = visitededge_[vc_];
      if (W == U) {
        SwitchResult result;
        result.cycle = expand_cycle(edge_index(e), edge_index(mV));
        std::vector<EdgeIndex> edges;
        for (const CyclePair& p : result.cycle) {
          edges.push_back(p.unmatched);
          edges.push_back(p.matched);
        }
        result.matching = symmetric_difference(graph_, initial_, edges);
        if (options_.trace) trace_.push_back(format_cycle(result.cycle));
        result.ops = counters();
        result.trace = std::move(trace_);
        result.invariant_checks = invariant_checks_;
        return result;
      }
      shrink(edge_index(e), edge_index(mV));
      // U may survive the unite; a stale index would outlive a restart at A
      visited_[U] = 0;
      if (options_.debug_invariants) check_invariants();
      checkvisited(W);
      if (options_.debug_invariants) check_invariants();
      if (vc_ > 1) {
        V = find(W);
      } else {
        restart = true;
      }
    }
  }
}

SwitchResult find_opposite_matching(const Digraph& g, const Matching& M, SwitchOptions options) {
  SwitchCycleState state(g, M, options);
  return state.run();
}

std::string format_cycle(const std::vector<CyclePair>& cycle) {
  std::ostringstream os;
  os << "cycle:";
  for (const CyclePair& p : cycle) os << " (" << p.unmatched << "," << p.matched << ")";
  return os.str();
}

BipartiteResult bipartite_opposite_matching(const Digraph& g, const Matching& M, Node start) {
  const int m = g.node_count();
  std::vector<std::vector<EdgeIndex>> incident(m + 1);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    incident[g.edge(e).tail].push_back(e);
    incident[g.edge(e).head].push_back(e);
  }
  std::vector<int> color(m + 1, -1);
  for (Node s = 1; s <= m; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<Node> stack{s};
    while (!stack.empty()) {
      const Node v = stack.back();
      stack.pop_back();
      for (EdgeIndex e : incident[v]) {
        const Node w = g.edge(e).tail == v ? g.edge(e).head : g.edge(e).tail;
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          fail(ErrorCode::NotBipartite, "odd cycle through node " + std::to_string(w));
        }
      }
    }
  }
  const auto outdeg = g.out_degrees();
  const auto indeg = g.in_degrees();
  for (Node v = 1; v <= m; ++v) {
    if (outdeg[v] == 0 || indeg[v] == 0) {
      fail(ErrorCode::SourceOrSink, "node " + std::to_string(v) + " is a source or sink");
    }
  }
  if (!is_perfect_matching(g, M)) fail(ErrorCode::NotPerfectMatching, "matching is not perfect");
  if (start < 1 || start > m) fail(ErrorCode::BadParams, "start node out of range");

  std::vector<EdgeIndex> matched_at(m + 1);
  for (EdgeIndex e : M) matched_at[g.edge(e).tail] = matched_at[g.edge(e).head] = e;
  constexpr EdgeIndex kNone = static_cast<EdgeIndex>(-1);
  std::vector<EdgeIndex> first_out(m + 1, kNone), first_in(m + 1, kNone);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (M.contains(e)) continue;
    if (first_out[g.edge(e).tail] == kNone) first_out[g.edge(e).tail] = e;
    if (first_in[g.edge(e).head] == kNone) first_in[g.edge(e).head] = e;
  }

  BipartiteResult result;
  std::vector<long> step_of(m + 1, -1);  // k for u_{2k}
  std::vector<EdgeIndex> walk;
  Node u = start;
  for (long k = 0;; ++k) {
    step_of[u] = k;
    const EdgeIndex me = matched_at[u];
    const bool forward = g.edge(me).tail == u;
    const Node v = forward ? g.edge(me).head : g.edge(me).tail;
    result.node_visits += 2;
    const EdgeIndex ue = forward ? first_out[v] : first_in[v];
    if (ue == kNone) fail(ErrorCode::Internal, "no co-directed unmatched edge");
    const Node next = forward ? g.edge(ue).head : g.edge(ue).tail;
    walk.push_back(me);
    walk.push_back(ue);
    if (step_of[next] >= 0) {
      result.cycle.assign(walk.begin() + 2 * step_of[next], walk.end());
      break;
    }
    u = next;
  }
  result.matching = symmetric_difference(g, M, result.cycle);
  return result;
}

}  // namespace eulerpiv

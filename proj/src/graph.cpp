#include "eulerpiv/graph.hpp"

#include <algorithm>
#include <sstream>

#include "text_util.hpp"

namespace eulerpiv {

Matching::Matching(std::vector<EdgeIndex> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    fail(ErrorCode::DuplicateEntry, "edge listed twice in matching");
  }
}

bool Matching::contains(EdgeIndex e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Digraph::Digraph(int node_count) : node_count_(node_count) {
  if (node_count < 0) fail(ErrorCode::BadParams, "negative node count");
}

Digraph::Digraph(int node_count, std::vector<Edge> edges, std::vector<EdgeIndex> matched)
    : Digraph(node_count) {
  for (const Edge& e : edges) check_edge(e.tail, e.head);
  edges_ = std::move(edges);
  set_matched(Matching(std::move(matched)));
}

void Digraph::check_edge(Node tail, Node head) const {
  if (tail < 1 || tail > node_count_ || head < 1 || head > node_count_) {
    fail(ErrorCode::BadParams, "edge (" + std::to_string(tail) + "," + std::to_string(head) +
                                   ") outside nodes 1.." + std::to_string(node_count_));
  }
  if (tail == head) fail(ErrorCode::BadParams, "loop at node " + std::to_string(tail));
}

EdgeIndex Digraph::add_edge(Node tail, Node head, bool matched) {
  check_edge(tail, head);
  edges_.push_back({tail, head});
  const EdgeIndex idx = edges_.size() - 1;
  if (matched) {
    std::vector<EdgeIndex> m = matched_.edges();
    m.push_back(idx);
    matched_ = Matching(std::move(m));
  }
  return idx;
}

void Digraph::set_matched(Matching m) {
  for (EdgeIndex e : m) {
    if (e >= edges_.size()) fail(ErrorCode::BadParams, "matched edge index out of range");
  }
  matched_ = std::move(m);
}

std::vector<int> Digraph::out_degrees() const {
  std::vector<int> deg(node_count_ + 1, 0);
  for (const Edge& e : edges_) ++deg[e.tail];
  return deg;
}

std::vector<int> Digraph::in_degrees() const {
  std::vector<int> deg(node_count_ + 1, 0);
  for (const Edge& e : edges_) ++deg[e.head];
  return deg;
}

bool is_eulerian(const Digraph& g) { return g.out_degrees() == g.in_degrees(); }

bool is_perfect_matching(const Digraph& g, const Matching& M) {
  std::vector<int> cover(g.node_count() + 1, 0);
  for (EdgeIndex e : M) {
    if (e >= g.edge_count()) return false;
    ++cover[g.edge(e).tail];
    ++cover[g.edge(e).head];
  }
  return std::all_of(cover.begin() + 1, cover.end(), [](int c) { return c == 1; });
}

InstanceReport validate_instance(const Digraph& g) {
  return {is_eulerian(g), is_perfect_matching(g, g.matched()), g.node_count() % 2 == 0};
}

Sign permutation_parity(std::span<const int> seq) {
  const std::size_t n = seq.size();
  if (n == 0) return Sign::plus();
  const auto [lo_it, hi_it] = std::minmax_element(seq.begin(), seq.end());
  const long long lo = *lo_it;
  const long long hi = *hi_it;

  std::vector<std::size_t> perm(n);
  if (static_cast<unsigned long long>(hi - lo) + 1 == n) {
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = static_cast<std::size_t>(seq[i] - lo);
      if (seen[v]) fail(ErrorCode::DuplicateEntry, "repeated entry " + std::to_string(seq[i]));
      seen[v] = 1;
      perm[i] = v;
    }
  } else {
    std::vector<int> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
      fail(ErrorCode::DuplicateEntry, "repeated entry " + std::to_string(*dup));
    }
    for (std::size_t i = 0; i < n; ++i) {
      perm[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), seq[i]) -
                                         sorted.begin());
    }
  }

  // parity = (-1)^(n - #cycles)
  std::vector<char> done(n, 0);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    ++cycles;
    for (std::size_t j = i; !done[j]; j = perm[j]) done[j] = 1;
  }
  return (n - cycles) % 2 == 0 ? Sign::plus() : Sign::minus();
}

Sign matching_sign(const Digraph& g, const Matching& M) {
  if (!is_perfect_matching(g, M)) fail(ErrorCode::NotPerfectMatching, "matching is not perfect");
  std::vector<int> seq;
  seq.reserve(2 * M.size());
  for (EdgeIndex e : M) {
    seq.push_back(g.edge(e).tail);
    seq.push_back(g.edge(e).head);
  }
  return permutation_parity(seq);
}

std::vector<std::vector<EdgeIndex>> euler_tours(const Digraph& g) {
  if (!is_eulerian(g)) fail(ErrorCode::NotEulerian, "indegree differs from outdegree");
  const int m = g.node_count();
  std::vector<std::vector<EdgeIndex>> out(m + 1);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) out[g.edge(e).tail].push_back(e);

  std::vector<std::size_t> next_out(m + 1, 0);
  std::vector<char> used(g.edge_count(), 0);
  std::vector<std::vector<EdgeIndex>> tours;

  constexpr EdgeIndex kNone = static_cast<EdgeIndex>(-1);
  struct Frame {
    Node node;
    EdgeIndex via;
  };
  for (EdgeIndex first = 0; first < g.edge_count(); ++first) {
    if (used[first]) continue;
    std::vector<Frame> stack{{g.edge(first).tail, kNone}};
    std::vector<EdgeIndex> circuit;
    while (!stack.empty()) {
      const Node v = stack.back().node;
      if (next_out[v] < out[v].size()) {
        const EdgeIndex e = out[v][next_out[v]++];
        stack.push_back({g.edge(e).head, e});
      } else {
        if (stack.back().via != kNone) circuit.push_back(stack.back().via);
        stack.pop_back();
      }
    }
    std::reverse(circuit.begin(), circuit.end());
    for (EdgeIndex e : circuit) used[e] = 1;
    tours.push_back(std::move(circuit));
  }
  return tours;
}

Pairing euler_pairing(const Digraph& g) {
  if (g.edge_count() == 0) fail(ErrorCode::NotEulerian, "graph has no edges");
  Pairing p;
  p.next.assign(g.edge_count(), 0);
  p.prev.assign(g.edge_count(), 0);
  for (const auto& tour : euler_tours(g)) {
    for (std::size_t i = 0; i < tour.size(); ++i) {
      const EdgeIndex e = tour[i];
      const EdgeIndex f = tour[(i + 1) % tour.size()];
      p.next[e] = f;
      p.prev[f] = e;
    }
  }
  return p;
}

Matching symmetric_difference(const Digraph& g, const Matching& M, std::span<const EdgeIndex> C) {
  if (!is_perfect_matching(g, M)) fail(ErrorCode::NotPerfectMatching, "matching is not perfect");
  const Matching cycle{std::vector<EdgeIndex>(C.begin(), C.end())};
  std::vector<int> in_m(g.node_count() + 1, 0), off_m(g.node_count() + 1, 0);
  for (EdgeIndex e : cycle) {
    if (e >= g.edge_count()) fail(ErrorCode::NotAlternating, "edge index out of range");
    auto& count = M.contains(e) ? in_m : off_m;
    ++count[g.edge(e).tail];
    ++count[g.edge(e).head];
  }
  for (Node v = 1; v <= g.node_count(); ++v) {
    if (in_m[v] + off_m[v] != 0 && (in_m[v] != 1 || off_m[v] != 1)) {
      fail(ErrorCode::NotAlternating, "node " + std::to_string(v) + " is not alternating");
    }
  }
  std::vector<EdgeIndex> result;
  std::set_symmetric_difference(M.begin(), M.end(), cycle.begin(), cycle.end(),
                                std::back_inserter(result));
  return Matching(std::move(result));
}

Digraph parse_digraph(std::istream& in) {
  using namespace detail;
  const auto lines = read_token_lines(in);
  if (lines.empty()) fail(ErrorCode::Parse, "empty input");
  expect_header(lines[0], "euler", 2);
  const long long m = parse_integer(lines[0].tokens[1], lines[0].line_no);
  const long long k = parse_integer(lines[0].tokens[2], lines[0].line_no);
  if (m < 1 || k < 0) parse_fail(lines[0].line_no, "bad node or edge count");
  if (lines.size() != static_cast<std::size_t>(k) + 1) {
    fail(ErrorCode::Parse, "expected " + std::to_string(k) + " edge lines, found " +
                               std::to_string(lines.size() - 1));
  }
  Digraph g(static_cast<int>(m));
  std::vector<EdgeIndex> matched;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const TokenLine& tl = lines[i];
    if (tl.tokens.size() != 3) parse_fail(tl.line_no, "expected '<tail> <head> <M|U>'");
    const long long tail = parse_integer(tl.tokens[0], tl.line_no);
    const long long head = parse_integer(tl.tokens[1], tl.line_no);
    if (tl.tokens[2] != "M" && tl.tokens[2] != "U") parse_fail(tl.line_no, "flag must be M or U");
    if (tail < 1 || tail > m || head < 1 || head > m) parse_fail(tl.line_no, "node out of range");
    if (tail == head) parse_fail(tl.line_no, "loops are not allowed");
    const EdgeIndex e = g.add_edge(static_cast<Node>(tail), static_cast<Node>(head));
    if (tl.tokens[2] == "M") matched.push_back(e);
  }
  g.set_matched(Matching(std::move(matched)));
  return g;
}

Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  return parse_digraph(in);
}

std::string format_digraph(const Digraph& g) {
  std::ostringstream os;
  os << "euler " << g.node_count() << ' ' << g.edge_count() << '\n';
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    os << g.edge(e).tail << ' ' << g.edge(e).head << ' ' << (g.is_matched(e) ? 'M' : 'U') << '\n';
  }
  return os.str();
}

std::string to_dot(const Digraph& g, const Matching* highlight) {
  const Matching& shown = highlight ? *highlight : g.matched();
  std::ostringstream os;
  os << "digraph euler {\n";
  for (Node v = 1; v <= g.node_count(); ++v) os << "  " << v << ";\n";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    os << "  " << g.edge(e).tail << " -> " << g.edge(e).head << " [label=\"" << e << "\"";
    if (shown.contains(e)) os << ", style=bold, color=red";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace eulerpiv

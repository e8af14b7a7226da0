#include "eulerpiv/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace eulerpiv {

namespace {

void check_cap(int m, int cap) {
  if (m > cap) {
    fail(ErrorCode::TooLarge, std::to_string(m) + " nodes exceed the oracle cap of " + std::to_string(cap));
  }
}

struct MatchingSearch {
  const Digraph& g;
  std::vector<std::vector<EdgeIndex>> incident;
  std::vector<char> covered;
  std::vector<EdgeIndex> chosen;
  std::vector<Matching> found;

  void run() {
    Node v = 1;
    while (v <= g.node_count() && covered[v]) ++v;
    if (v > g.node_count()) {
      found.emplace_back(chosen);
      return;
    }
    for (EdgeIndex e : incident[v]) {
      const Node other = g.edge(e).tail == v ? g.edge(e).head : g.edge(e).tail;
      if (covered[other]) continue;
      covered[v] = covered[other] = 1;
      chosen.push_back(e);
      run();
      chosen.pop_back();
      covered[v] = covered[other] = 0;
    }
  }
};

}  // namespace

std::vector<Matching> enumerate_matchings(const Digraph& g, int cap) {
  check_cap(g.node_count(), cap);
  if (g.node_count() % 2 != 0) return {};
  MatchingSearch search{g, std::vector<std::vector<EdgeIndex>>(g.node_count() + 1),
                        std::vector<char>(g.node_count() + 1, 0), {}, {}};
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    search.incident[g.edge(e).tail].push_back(e);
    search.incident[g.edge(e).head].push_back(e);
  }
  search.run();
  return std::move(search.found);
}

SkewMatrix skew_adjacency(const Digraph& g) {
  const int m = g.node_count();
  SkewMatrix b = SkewMatrix::Zero(m, m);
  for (const Edge& e : g.edges()) {
    b(e.tail - 1, e.head - 1) += 1;
    b(e.head - 1, e.tail - 1) -= 1;
  }
  return b;
}

std::int64_t signed_matching_sum(const Digraph& g, int cap) {
  std::int64_t sum = 0;
  for (const Matching& M : enumerate_matchings(g, cap)) sum += matching_sign(g, M).value();
  return sum;
}

std::uint64_t count_perfect_matchings(const Digraph& g, int cap) {
  const int m = g.node_count();
  check_cap(m, cap);
  if (m % 2 != 0) return 0;
  std::vector<std::vector<std::uint64_t>> mult(m, std::vector<std::uint64_t>(m, 0));
  for (const Edge& e : g.edges()) {
    ++mult[e.tail - 1][e.head - 1];
    ++mult[e.head - 1][e.tail - 1];
  }
  // ways[mask] = matchings covering exactly the nodes in mask
  const std::uint32_t full = (1u << m) - 1;
  std::vector<std::uint64_t> ways(full + 1, 0);
  ways[0] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(1u << low);
    std::uint64_t total = 0;
    for (int j = low + 1; j < m; ++j) {
      if ((rest >> j & 1u) && mult[low][j]) total += mult[low][j] * ways[rest & ~(1u << j)];
    }
    ways[mask] = total;
  }
  return ways[full];
}

BigInt pfaffian_expansion(const SkewMatrix& B) {
  const auto m = static_cast<int>(B.rows());
  check_cap(m, 20);
  if (m % 2 != 0) return 0;
  // memo[mask] = pf of the principal submatrix on the nodes in mask
  const std::uint32_t full = (1u << m) - 1;
  std::vector<BigInt> memo(static_cast<std::size_t>(full) + 1);
  memo[0] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    const int low = std::countr_zero(mask);
    BigInt total = 0;
    int pos = 1;  // 1-based position within the sorted subset
    for (int j = low + 1; j < m; ++j) {
      if (!(mask >> j & 1u)) continue;
      ++pos;
      if (B(low, j) == 0) continue;
      const BigInt term = BigInt(B(low, j)) * memo[mask & ~(1u << low) & ~(1u << j)];
      if (pos % 2 == 0) total += term;
      else total -= term;
    }
    memo[mask] = total;
  }
  return memo[full];
}

BigInt leibniz_determinant(const SkewMatrix& B) {
  const auto n = static_cast<int>(B.rows());
  check_cap(n, 9);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    BigInt term = permutation_parity(perm).value();
    for (int i = 0; i < n && term != 0; ++i) term *= B(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

BigInt determinant_exact(const SkewMatrix& B, int cap) {
  check_cap(static_cast<int>(B.rows()), cap);
  const BigInt det = bareiss_determinant<BigInt>(B.cast<BigInt>());
  if (B.rows() <= 6 && det != leibniz_determinant(B)) {
    fail(ErrorCode::Internal, "elimination and permutation expansion disagree");
  }
  return det;
}

}  // namespace eulerpiv

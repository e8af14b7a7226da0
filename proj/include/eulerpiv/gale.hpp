#pragma once

// Cyclic Gale strings, their labeled pivoting, and the derived Euler digraph
// whose perfect matchings they encode.

#include <iosfwd>
#include <string>
#include <vector>

#include "eulerpiv/graph.hpp"
#include "eulerpiv/pivot.hpp"

namespace eulerpiv {

/// Characters '0' and '1', position j of the string is bit j+1.
using GaleString = std::string;

/// Every maximal cyclic run of 1s has even length. Needs some 0.
bool is_gale(const GaleString& g);

/// G(m, n) in lexicographic order. Throws BadParams unless m is even and
/// positive and m < n <= 24.
std::vector<GaleString> enumerate_gale(int m, int n);

struct GaleLabeling {
  int m = 0;
  std::vector<int> labels;  // labels[j-1] = l(j) in 1..m

  int n() const { return static_cast<int>(labels.size()); }
};

/// Throws BadParams on labels outside 1..m.
GaleLabeling make_gale_labeling(int m, std::vector<int> labels);

/// Edge j-1 is (l(j), l(j+1)), cyclically. Throws LoopCreated.
Digraph derived_graph(const GaleLabeling& l);

/// Consecutive cyclic pairs of 1s as edges of the derived graph. Throws
/// OddRun.
Matching gale_to_matching(const GaleString& g, const GaleLabeling& l);

bool is_completely_labeled(const GaleString& g, const GaleLabeling& l);

/// States are Gale strings, nodes the 1-based positions of their 1s.
class GaleSystem {
 public:
  using State = GaleString;

  explicit GaleSystem(const GaleLabeling& l) : l_(l) {}

  int arity() const { return l_.m; }
  std::vector<int> representation(const State& g) const;
  /// Drops the i-th 1 and adds the 1 that makes the odd remainder even.
  PivotStep<State> pivot(const State& g, int i) const;
  int label(int v) const { return l_.labels.at(v - 1); }
  std::uint64_t state_count() const;
  std::string state_name(const State& g) const { return g; }

 private:
  const GaleLabeling& l_;
};

/// Complementary pivoting on Gale strings. Throws NotCL, BadParams for a
/// string that is not in G(m, n).
PathResult<GaleString> gale_pivot_path(const GaleString& g, const GaleLabeling& l, int w, PathOptions options = {});

// Labeling text format:
//   gale <m> <n>
//   <l(1)> ... <l(n)>
GaleLabeling parse_gale(std::istream& in);
GaleLabeling parse_gale(const std::string& text);
std::string format_gale(const GaleLabeling& l);

}  // namespace eulerpiv

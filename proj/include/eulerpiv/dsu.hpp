#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eulerpiv/common.hpp"

namespace eulerpiv {

/// Union-find over the dense range 1..capacity with union by rank and path
/// compression.
class DisjointSets {
 public:
  struct Counters {
    std::uint64_t finds = 0;
    std::uint64_t parent_steps = 0;
    std::uint64_t unites = 0;
  };

  explicit DisjointSets(int capacity = 0);

  /// Throws AlreadyInitialized.
  void makeset(int x);
  bool initialized(int x) const;

  /// Throws Uninitialized.
  int find(int x);
  /// Root lookup without compression or counting, for inspection.
  int root(int x) const;

  /// Returns {new_rep, old_rep}. On equal ranks the root of y survives.
  /// Throws SameClass.
  std::pair<int, int> unite(int x, int y);

  int rank(int x) const { return rank_.at(x); }
  int capacity() const { return static_cast<int>(parent_.size()) - 1; }
  const Counters& counters() const { return counters_; }

 private:
  void check(int x) const;

  std::vector<int> parent_;  // 0 marks an uninitialized slot
  std::vector<int> rank_;
  Counters counters_;
};

}  // namespace eulerpiv

#include "eulerpiv/dsu.hpp"

#include <string>

namespace eulerpiv {

DisjointSets::DisjointSets(int capacity)
    : parent_(static_cast<std::size_t>(capacity < 0 ? 0 : capacity) + 1, 0),
      rank_(parent_.size(), 0) {}

void DisjointSets::check(int x) const {
  if (!initialized(x)) fail(ErrorCode::Uninitialized, "node " + std::to_string(x) + " has no class");
}

bool DisjointSets::initialized(int x) const {
  return x >= 1 && x < static_cast<int>(parent_.size()) && parent_[x] != 0;
}

void DisjointSets::makeset(int x) {
  if (x < 1 || x >= static_cast<int>(parent_.size())) {
    fail(ErrorCode::BadParams, "node " + std::to_string(x) + " outside capacity");
  }
  if (parent_[x] != 0) fail(ErrorCode::AlreadyInitialized, "node " + std::to_string(x));
  parent_[x] = x;
  rank_[x] = 0;
}

int DisjointSets::find(int x) {
  check(x);
  ++counters_.finds;
  int r = x;
  while (parent_[r] != r) {
    r = parent_[r];
    ++counters_.parent_steps;
  }
  while (parent_[x] != r) {
    const int next = parent_[x];
    parent_[x] = r;
    x = next;
  }
  return r;
}

int DisjointSets::root(int x) const {
  check(x);
  while (parent_[x] != x) x = parent_[x];
  return x;
}

std::pair<int, int> DisjointSets::unite(int x, int y) {
  const int X = find(x);
  const int Y = find(y);
  if (X == Y) fail(ErrorCode::SameClass, "nodes " + std::to_string(x) + " and " + std::to_string(y));
  ++counters_.unites;
  if (rank_[X] > rank_[Y]) {
    parent_[Y] = X;
    return {X, Y};
  }
  parent_[X] = Y;
  if (rank_[X] == rank_[Y]) ++rank_[Y];
  return {Y, X};
}

}  // namespace eulerpiv

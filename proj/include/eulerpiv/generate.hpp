#pragma once

// Seeded instance generators and small fixtures.

#include <vector>

#include "eulerpiv/common.hpp"
#include "eulerpiv/gale.hpp"
#include "eulerpiv/graph.hpp"
#include "eulerpiv/oik.hpp"
#include "eulerpiv/polytope.hpp"

namespace eulerpiv {

/// m/2 disjoint 2-cycles with one edge of each matched, plus `extra_cycles`
/// directed cycles on random distinct nodes, edges in random order. Throws
/// BadParams unless m is even and positive.
Digraph random_euler_instance(int m, int extra_cycles, Rng& rng);

/// As above, but every edge joins the two halves of a random bipartition.
Digraph random_bipartite_instance(int m, int extra_cycles, Rng& rng);

/// Euler instance with about `edges` edges: a Hamiltonian cycle on edges/2
/// nodes with every other edge matched, the rest in cycles of length 3 to 8.
Digraph bench_instance(std::size_t edges, Rng& rng);

/// Each pair u < v is an edge with probability 1/2, in a random direction.
Digraph random_simple_digraph(int m, Rng& rng);

/// Union of `cycles` cycles of random length on random distinct nodes of
/// 1..n, each traversed in a random direction, as a coherently oriented 2-oik.
OikFile random_two_oik(int n, int cycles, Rng& rng);

struct UnitVectorGame {
  RationalMatrix C;
  std::vector<int> labels;
};

/// C with entries in 0..max_entry and every column nonzero, so that the
/// polytope is bounded; labels uniform in 1..m.
UnitVectorGame random_unit_vector_game(int m, int rows, int max_entry, Rng& rng);

/// Uniform loop-free labeling [n] -> [m] (cyclically), by rejection.
GaleLabeling random_gale_labeling(int m, int n, Rng& rng);

/// The octahedron over 1..6 with antipodes 1-6, 2-5, 3-4, rooms
/// 123 145 124 135 456 236 356 246 and orientations + - - + + - - +.
OikFile octahedron_oik();

/// Triangulated p x q grid with the rows glued straight and the columns
/// glued with a reflection. Vertex (i, j) is i*q + j + 1.
Oik klein_bottle_oik(int p, int q);

/// Same grid glued straight both ways.
Oik torus_oik(int p, int q);

/// 1->2->3->4->1 with {12,34} matched: the Eulerian 4-cycle.
Digraph four_cycle();

/// 2-oiks over 1..4 with orientations from these digraphs: the 4-cycle, and
/// 12 34 13 24 oriented upward plus a doubled 4->1.
Digraph left_four_node_graph();
Digraph right_four_node_graph();

}  // namespace eulerpiv

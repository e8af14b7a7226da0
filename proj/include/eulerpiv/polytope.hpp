#pragma once

// Labeled polytopes {x | a_j^T x <= b_j} in exact rational arithmetic, with
// vertex bases, determinant orientations and edge pivots.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "eulerpiv/common.hpp"
#include "eulerpiv/oik.hpp"
#include "eulerpiv/pivot.hpp"

namespace eulerpiv {

using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Constraint j (1-based) is row j-1 of `a` with bound b(j-1) and a label in 1..m.
struct LabeledPolytope {
  RationalMatrix a;  // n x m
  RationalVector b;
  std::vector<int> labels;

  int dim() const { return static_cast<int>(a.cols()); }
  int constraint_count() const { return static_cast<int>(a.rows()); }
  int label(int j) const { return labels.at(j - 1); }
};

/// Checks shapes and label range; throws BadParams.
LabeledPolytope make_polytope(RationalMatrix a, RationalVector b, std::vector<int> labels);

/// Sorted constraint ids, one per coordinate.
using Basis = std::vector<int>;

struct Vertex {
  RationalVector x;
  Sign sigma;  // sgn det of the tight rows in basis order
};

/// Throws BadParams on a malformed basis, Singular, NotAVertex when another
/// constraint is violated, Degenerate when another constraint is tight.
Vertex vertex_solve(const LabeledPolytope& P, const Basis& basis);

struct EdgePivot {
  Basis next;
  std::vector<int> pi;
  int entering = 0;
};

/// Moves along the edge that leaves facet basis[i]. Throws Unbounded or
/// Degenerate (tied ratio test).
EdgePivot pivot_edge(const LabeledPolytope& P, const Basis& basis, int i);

/// Vertices as states, constraint ids as nodes.
class PolytopeSystem {
 public:
  using State = Basis;

  /// `flip_even` multiplies every orientation by -1 when the dimension is
  /// even, so that the vertex 0 of a unit-vector polytope has sign -1.
  explicit PolytopeSystem(const LabeledPolytope& P, bool flip_even = false);

  int arity() const { return P_.dim(); }
  std::vector<int> representation(const State& s) const { return s; }
  PivotStep<State> pivot(const State& s, int i) const;
  int label(int v) const { return P_.label(v); }
  Sign orientation(const State& s) const;
  std::uint64_t state_count() const;
  std::string state_name(const State& s) const;

 private:
  const LabeledPolytope& P_;
  Sign flip_;
};

struct LemkeResult {
  PathResult<Basis> path;
  RationalVector start_x;
  RationalVector end_x;
};

/// Complementary pivoting along edges from a CL vertex. Throws NotCL and
/// the pivot errors.
LemkeResult lemke_path(const LabeledPolytope& P, const Basis& start, int w, bool flip_even = false,
                       PathOptions options = {});

/// {x | -x <= 0, Cx <= 1}; -x_i <= 0 is constraint i with label i, row k of C
/// is constraint m+k with label c_labels[k]. Throws NotBounded.
LabeledPolytope build_unit_vector_polytope(const RationalMatrix& C, const std::vector<int>& c_labels);

/// True if some nonzero d >= 0 has Cd <= 0.
bool has_recession_direction(const RationalMatrix& C);

/// Basis {1..m}: the vertex 0 of a unit-vector polytope.
Basis origin_basis(int m);

struct Equilibrium {
  RationalVector x;  // CL point scaled so that Cx <= 1, (comp1)
  RationalVector y;
  RationalVector xhat;  // mixed strategies
  RationalVector yhat;
  Rational u;  // payoffs 1/1^T x, 1/1^T y
  Rational v;
};

/// Nash equilibrium of the unit-vector game (A, C^T) from a CL vertex x != 0
/// of the polytope built from C and c_labels. Throws BadParams when x = 0 or
/// x is not CL, VerificationFailed if the exact check fails.
Equilibrium extract_equilibrium(const RationalMatrix& C, const std::vector<int>& c_labels, const RationalVector& x);

/// Exact check of the scaled equilibrium conditions.
bool verify_equilibrium(const RationalMatrix& C, const std::vector<int>& c_labels, const Equilibrium& eq);

struct VertexRecord {
  Basis basis;
  RationalVector x;
  Sign sigma;
};

/// Every vertex by trying all bases. Throws Degenerate and TooLarge beyond
/// m <= 6, n <= 12.
std::vector<VertexRecord> enumerate_vertices(const LabeledPolytope& P);

struct SpernerPolytope {
  LabeledPolytope polytope;
  std::vector<VertexRecord> vertices;  // product-of-simplices order
  std::vector<Room> rooms;             // tight constraint ids of each vertex
};

/// {y | Ay <= 1, y >= 0} for A = [e_l(m+1) ... e_l(n)]: constraint i <= m is
/// row i of A, constraint m+j is y_j >= 0. Checks every vertex against the
/// Sperner oik of the labeling. Throws BadLabeling unless l(i) = i for i <= m.
SpernerPolytope sperner_polytope(const std::vector<int>& labels, int m);

// Polytope text format:
//   polytope <m> <n>
//   <label> <b_j> <a_j1> ... <a_jm>     (n lines, rationals as p/q)
LabeledPolytope parse_polytope(std::istream& in);
LabeledPolytope parse_polytope(const std::string& text);
std::string format_polytope(const LabeledPolytope& P);

std::string format_vector(const RationalVector& x);
Rational parse_rational(const std::string& token);

}  // namespace eulerpiv

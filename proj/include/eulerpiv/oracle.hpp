#pragma once

// Brute-force ground truth for matchings, signed sums and determinants.

#include <cstdint>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "eulerpiv/graph.hpp"

namespace eulerpiv {

using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// b(u-1, v-1) = #(u->v) - #(v->u).
using SkewMatrix = DenseMatrix<std::int64_t>;

inline constexpr int kDefaultOracleCap = 16;

/// All perfect matchings, by backtracking on the lowest uncovered node with
/// candidate edges in index order. Throws TooLarge when m > cap.
std::vector<Matching> enumerate_matchings(const Digraph& g, int cap = kDefaultOracleCap);

SkewMatrix skew_adjacency(const Digraph& g);

/// Sum of matching_sign over all perfect matchings.
std::int64_t signed_matching_sum(const Digraph& g, int cap = kDefaultOracleCap);

/// Number of perfect matchings by a subset DP, independent of enumeration.
std::uint64_t count_perfect_matchings(const Digraph& g, int cap = kDefaultOracleCap);

/// Pfaffian by expansion along the first row.
BigInt pfaffian_expansion(const SkewMatrix& B);

/// Fraction-free Gaussian elimination with row swaps. Exact for any integral
/// Scalar wide enough for the intermediates.
template <typename Scalar>
Scalar bareiss_determinant(DenseMatrix<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) fail(ErrorCode::BadParams, "determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Sum over all permutations, n! terms.
BigInt leibniz_determinant(const SkewMatrix& B);

/// Exact determinant; for m <= 6 also checked against the Leibniz sum
/// (a mismatch throws Internal). Throws TooLarge when m > cap.
BigInt determinant_exact(const SkewMatrix& B, int cap = kDefaultOracleCap);

}  // namespace eulerpiv

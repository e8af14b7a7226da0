#include "eulerpiv/polytope.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <set>
#include <sstream>

#include "text_util.hpp"

namespace eulerpiv {

namespace {

struct ExactSolve {
  Rational det;
  RationalMatrix x;  // valid only when det != 0
};

// Gaussian elimination over the rationals for M X = B.
ExactSolve solve_exact(RationalMatrix M, RationalMatrix B) {
  const Eigen::Index n = M.rows();
  Rational det = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && M(p, k) == 0) ++p;
    if (p == n) return {Rational(0), {}};
    if (p != k) {
      M.row(k).swap(M.row(p));
      B.row(k).swap(B.row(p));
      det = -det;
    }
    const Rational pivot = M(k, k);
    det *= pivot;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (M(i, k) == 0) continue;
      const Rational f = M(i, k) / pivot;
      for (Eigen::Index j = k; j < n; ++j) M(i, j) -= f * M(k, j);
      for (Eigen::Index j = 0; j < B.cols(); ++j) B(i, j) -= f * B(k, j);
    }
  }
  RationalMatrix X(n, B.cols());
  for (Eigen::Index c = 0; c < B.cols(); ++c) {
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      Rational s = B(i, c);
      for (Eigen::Index j = i + 1; j < n; ++j) s -= M(i, j) * X(j, c);
      X(i, c) = s / M(i, i);
    }
  }
  return {det, X};
}

Rational row_dot(const RationalMatrix& a, Eigen::Index row, const RationalVector& x) {
  Rational s = 0;
  for (Eigen::Index k = 0; k < a.cols(); ++k) s += a(row, k) * x(k);
  return s;
}

RationalVector mat_vec(const RationalMatrix& a, const RationalVector& x) {
  RationalVector out(a.rows());
  for (Eigen::Index r = 0; r < a.rows(); ++r) out(r) = row_dot(a, r, x);
  return out;
}

RationalVector scaled(const RationalVector& x, const Rational& f) {
  RationalVector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out(i) = x(i) * f;
  return out;
}

void check_basis(const LabeledPolytope& P, const Basis& basis) {
  if (static_cast<int>(basis.size()) != P.dim()) {
    fail(ErrorCode::BadParams, "basis needs " + std::to_string(P.dim()) + " constraints");
  }
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k] < 1 || basis[k] > P.constraint_count()) fail(ErrorCode::BadParams, "constraint id out of range");
    if (k && basis[k] <= basis[k - 1]) fail(ErrorCode::BadParams, "basis must be strictly increasing");
  }
}

std::string basis_name(const Basis& basis) {
  std::string out = "{";
  for (std::size_t k = 0; k < basis.size(); ++k) out += (k ? "," : "") + std::to_string(basis[k]);
  return out + "}";
}

RationalMatrix basis_rows(const LabeledPolytope& P, const Basis& basis) {
  RationalMatrix M(P.dim(), P.dim());
  for (int r = 0; r < P.dim(); ++r) M.row(r) = P.a.row(basis[r] - 1);
  return M;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long double c = 1;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c >= 1.8e19L ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(c + 0.5L);
}

}  // namespace

LabeledPolytope make_polytope(RationalMatrix a, RationalVector b, std::vector<int> labels) {
  if (a.rows() != b.rows() || static_cast<Eigen::Index>(labels.size()) != a.rows()) {
    fail(ErrorCode::BadParams, "constraint rows, bounds and labels differ in length");
  }
  if (a.cols() < 1) fail(ErrorCode::BadParams, "dimension must be positive");
  for (int l : labels) {
    if (l < 1 || l > a.cols()) fail(ErrorCode::BadParams, "label " + std::to_string(l) + " out of range");
  }
  return LabeledPolytope{std::move(a), std::move(b), std::move(labels)};
}

Vertex vertex_solve(const LabeledPolytope& P, const Basis& basis) {
  check_basis(P, basis);
  RationalMatrix rhs(P.dim(), 1);
  for (int r = 0; r < P.dim(); ++r) rhs(r, 0) = P.b(basis[r] - 1);
  const ExactSolve sol = solve_exact(basis_rows(P, basis), rhs);
  if (sol.det == 0) fail(ErrorCode::Singular, "basis " + basis_name(basis) + " is singular");
  RationalVector x = sol.x.col(0);
  std::size_t next = 0;
  for (int j = 1; j <= P.constraint_count(); ++j) {
    if (next < basis.size() && basis[next] == j) {
      ++next;
      continue;
    }
    const Rational slack = P.b(j - 1) - row_dot(P.a, j - 1, x);
    if (slack < 0) fail(ErrorCode::NotAVertex, "basis " + basis_name(basis) + " violates constraint " + std::to_string(j));
    if (slack == 0) fail(ErrorCode::Degenerate, "constraint " + std::to_string(j) + " is also tight at " + basis_name(basis));
  }
  return Vertex{std::move(x), sol.det > 0 ? Sign::plus() : Sign::minus()};
}

EdgePivot pivot_edge(const LabeledPolytope& P, const Basis& basis, int i) {
  const Vertex v = vertex_solve(P, basis);
  if (i < 0 || i >= P.dim()) fail(ErrorCode::BadPosition, "position out of range");
  RationalMatrix rhs = RationalMatrix::Zero(P.dim(), 1);
  rhs(i, 0) = -1;
  const RationalVector dir = solve_exact(basis_rows(P, basis), rhs).x.col(0);

  int entering = 0;
  Rational best;
  bool tie = false;
  for (int j = 1; j <= P.constraint_count(); ++j) {
    if (std::binary_search(basis.begin(), basis.end(), j)) continue;
    const Rational rate = row_dot(P.a, j - 1, dir);
    if (rate <= 0) continue;
    const Rational t = (P.b(j - 1) - row_dot(P.a, j - 1, v.x)) / rate;
    if (entering == 0 || t < best) {
      entering = j;
      best = t;
      tie = false;
    } else if (t == best) {
      tie = true;
    }
  }
  if (entering == 0) fail(ErrorCode::Unbounded, "edge leaving constraint " + std::to_string(basis[i]) + " is a ray");
  if (tie) fail(ErrorCode::Degenerate, "tied ratio test leaving constraint " + std::to_string(basis[i]));

  std::vector<int> replaced = basis;
  replaced[i] = entering;
  EdgePivot out{replaced, std::vector<int>(basis.size()), entering};
  std::sort(out.next.begin(), out.next.end());
  for (std::size_t k = 0; k < replaced.size(); ++k) {
    out.pi[k] = static_cast<int>(std::lower_bound(out.next.begin(), out.next.end(), replaced[k]) - out.next.begin());
  }
  return out;
}

PolytopeSystem::PolytopeSystem(const LabeledPolytope& P, bool flip_even)
    : P_(P), flip_(flip_even && P.dim() % 2 == 0 ? Sign::minus() : Sign::plus()) {}

PivotStep<PolytopeSystem::State> PolytopeSystem::pivot(const State& s, int i) const {
  EdgePivot e = pivot_edge(P_, s, i);
  return {std::move(e.next), std::move(e.pi)};
}

Sign PolytopeSystem::orientation(const State& s) const { return flip_ * vertex_solve(P_, s).sigma; }

std::uint64_t PolytopeSystem::state_count() const { return binomial(P_.constraint_count(), P_.dim()); }

std::string PolytopeSystem::state_name(const State& s) const { return basis_name(s); }

LemkeResult lemke_path(const LabeledPolytope& P, const Basis& start, int w, bool flip_even, PathOptions options) {
  PolytopeSystem sys(P, flip_even);
  auto path = follow_path(sys, start, w, options);
  RationalVector start_x = vertex_solve(P, path.start).x;
  RationalVector end_x = vertex_solve(P, path.end).x;
  return LemkeResult{std::move(path), std::move(start_x), std::move(end_x)};
}

bool has_recession_direction(const RationalMatrix& C) {
  const int m = static_cast<int>(C.cols());
  const int k = static_cast<int>(C.rows());
  bool nonnegative = true;
  for (int c = 0; c < m; ++c) {
    bool positive = false;
    for (int r = 0; r < k; ++r) {
      if (C(r, c) < 0) nonnegative = false;
      if (C(r, c) > 0) positive = true;
    }
    if (!positive) return true;  // d = e_c
  }
  if (nonnegative) return false;

  // Vertices of {d >= 0, 1^T d = 1, Cd <= 0}: m-1 tight inequalities plus the
  // normalization.
  RationalMatrix rows(m + k, m);
  rows.topRows(m) = -RationalMatrix::Identity(m, m);
  rows.bottomRows(k) = C;
  if (binomial(m + k, m - 1) > 200'000) fail(ErrorCode::TooLarge, "too many candidate directions");
  std::vector<int> pick(m - 1);
  for (int q = 0; q < m - 1; ++q) pick[q] = q;
  do {
    RationalMatrix M(m, m);
    RationalMatrix rhs = RationalMatrix::Zero(m, 1);
    for (int q = 0; q < m - 1; ++q) M.row(q) = rows.row(pick[q]);
    M.row(m - 1).setConstant(Rational(1));
    rhs(m - 1, 0) = 1;
    const ExactSolve sol = solve_exact(M, rhs);
    if (sol.det == 0) continue;
    const RationalVector d = sol.x.col(0);
    bool feasible = true;
    for (int r = 0; r < m + k && feasible; ++r) feasible = row_dot(rows, r, d) <= 0;
    if (feasible) return true;
  } while (m > 1 && next_combination(pick, m + k));
  return false;
}

LabeledPolytope build_unit_vector_polytope(const RationalMatrix& C, const std::vector<int>& c_labels) {
  const int m = static_cast<int>(C.cols());
  const int k = static_cast<int>(C.rows());
  if (m < 1) fail(ErrorCode::BadParams, "dimension must be positive");
  if (static_cast<int>(c_labels.size()) != k) fail(ErrorCode::BadParams, "one label per row of C is required");
  if (has_recession_direction(C)) fail(ErrorCode::NotBounded, "{x >= 0, Cx <= 1} contains a ray");
  RationalMatrix a(m + k, m);
  a.topRows(m) = -RationalMatrix::Identity(m, m);
  a.bottomRows(k) = C;
  RationalVector b(m + k);
  std::vector<int> labels;
  for (int i = 1; i <= m; ++i) {
    b(i - 1) = 0;
    labels.push_back(i);
  }
  for (int r = 0; r < k; ++r) {
    b(m + r) = 1;
    labels.push_back(c_labels[r]);
  }
  return make_polytope(std::move(a), std::move(b), std::move(labels));
}

Basis origin_basis(int m) {
  Basis out(m);
  for (int i = 0; i < m; ++i) out[i] = i + 1;
  return out;
}

bool verify_equilibrium(const RationalMatrix& C, const std::vector<int>& c_labels, const Equilibrium& eq) {
  const int m = static_cast<int>(C.cols());
  const int k = static_cast<int>(C.rows());
  if (eq.x.size() != m || eq.y.size() != k || eq.xhat.size() != m || eq.yhat.size() != k) return false;
  RationalVector Ay = RationalVector::Zero(m);
  RationalVector Ayhat = RationalVector::Zero(m);
  for (int j = 0; j < k; ++j) {
    Ay(c_labels[j] - 1) += eq.y(j);
    Ayhat(c_labels[j] - 1) += eq.yhat(j);
  }
  const RationalVector Cx = mat_vec(C, eq.x);
  const RationalVector Cxhat = mat_vec(C, eq.xhat);
  bool x_nonzero = false, y_nonzero = false;
  Rational sum_xhat = 0, sum_yhat = 0;
  for (int i = 0; i < m; ++i) {
    if (eq.x(i) < 0 || eq.xhat(i) < 0 || Ay(i) > 1 || Ayhat(i) > eq.u) return false;
    if (eq.x(i) > 0) {
      x_nonzero = true;
      if (Ay(i) != 1) return false;
    }
    if (eq.xhat(i) > 0 && Ayhat(i) != eq.u) return false;
    sum_xhat += eq.xhat(i);
  }
  for (int j = 0; j < k; ++j) {
    if (eq.y(j) < 0 || eq.yhat(j) < 0 || Cx(j) > 1 || Cxhat(j) > eq.v) return false;
    if (eq.y(j) > 0) {
      y_nonzero = true;
      if (Cx(j) != 1) return false;
    }
    if (eq.yhat(j) > 0 && Cxhat(j) != eq.v) return false;
    sum_yhat += eq.yhat(j);
  }
  return x_nonzero && y_nonzero && sum_xhat == 1 && sum_yhat == 1;
}

Equilibrium extract_equilibrium(const RationalMatrix& C, const std::vector<int>& c_labels, const RationalVector& x) {
  const int m = static_cast<int>(C.cols());
  const int k = static_cast<int>(C.rows());
  if (x.size() != m || static_cast<int>(c_labels.size()) != k) fail(ErrorCode::BadParams, "dimension mismatch");
  Rational total = 0;
  for (int i = 0; i < m; ++i) {
    if (x(i) < 0) fail(ErrorCode::BadParams, "point has a negative coordinate");
    total += x(i);
  }
  if (total == 0) fail(ErrorCode::BadParams, "the vertex 0 encodes no equilibrium");
  const RationalVector Cx = mat_vec(C, x);
  Equilibrium eq;
  eq.x = x;
  eq.y = RationalVector::Zero(k);
  for (int i = 1; i <= m; ++i) {
    if (x(i - 1) == 0) continue;
    int j = 0;
    while (j < k && !(Cx(j) == 1 && c_labels[j] == i)) ++j;
    if (j == k) fail(ErrorCode::BadParams, "point is not completely labeled: label " + std::to_string(i));
    eq.y(j) = 1;
  }
  Rational sum_y = 0;
  for (int j = 0; j < k; ++j) sum_y += eq.y(j);
  // x scales with player 2's payoff and y with player 1's.
  eq.v = 1 / total;
  eq.u = 1 / sum_y;
  eq.xhat = scaled(x, eq.v);
  eq.yhat = scaled(eq.y, eq.u);
  if (!verify_equilibrium(C, c_labels, eq)) fail(ErrorCode::VerificationFailed, "equilibrium conditions fail");
  return eq;
}

std::vector<VertexRecord> enumerate_vertices(const LabeledPolytope& P) {
  const int m = P.dim();
  const int n = P.constraint_count();
  if (m > 6 || n > 12) fail(ErrorCode::TooLarge, "vertex enumeration is limited to m <= 6, n <= 12");
  std::vector<VertexRecord> out;
  if (n < m) return out;
  std::vector<int> pick(m);
  for (int q = 0; q < m; ++q) pick[q] = q;
  do {
    Basis basis(m);
    for (int q = 0; q < m; ++q) basis[q] = pick[q] + 1;
    try {
      Vertex v = vertex_solve(P, basis);
      out.push_back({basis, std::move(v.x), v.sigma});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Singular && e.code() != ErrorCode::NotAVertex) throw;
    }
  } while (next_combination(pick, n));
  return out;
}

SpernerPolytope sperner_polytope(const std::vector<int>& labels, int m) {
  const int n = static_cast<int>(labels.size());
  for (int v = 1; v <= n; ++v) {
    const int l = labels[v - 1];
    if (l < 1 || l > m) fail(ErrorCode::BadLabeling, "label " + std::to_string(l) + " out of range");
    if (v <= m && l != v) fail(ErrorCode::BadLabeling, "node " + std::to_string(v) + " must carry label " + std::to_string(v));
  }
  const Oik oik = sperner_oik(labels, m);
  const int k = n - m;

  std::vector<std::vector<int>> L(m + 1);
  RationalMatrix a = RationalMatrix::Zero(n, k);
  RationalVector b(n);
  std::vector<int> plabels;
  for (int j = 1; j <= k; ++j) {
    const int i = labels[m + j - 1];
    L[i].push_back(j);
    a(i - 1, j - 1) = 1;
    a(m + j - 1, j - 1) = -1;
  }
  for (int i = 1; i <= m; ++i) {
    b(i - 1) = 1;
    plabels.push_back(i);
  }
  for (int j = 1; j <= k; ++j) {
    b(m + j - 1) = 0;
    plabels.push_back(labels[m + j - 1]);
  }
  // labels lie in [m], not in [k]
  SpernerPolytope out{LabeledPolytope{std::move(a), std::move(b), std::move(plabels)}, {}, {}};
  const LabeledPolytope& P = out.polytope;

  // Product of simplices: in factor i pick 0 or one unit vector e_j, j in L(i).
  std::vector<std::size_t> choice(m + 1, 0);
  for (;;) {
    RationalVector y = RationalVector::Zero(k);
    for (int i = 1; i <= m; ++i) {
      if (choice[i] > 0) y(L[i][choice[i] - 1] - 1) = 1;
    }
    Basis tight;
    std::set<int> nontight_labels;
    for (int i = 1; i <= m; ++i) {
      if (row_dot(P.a, i - 1, y) == 1) {
        tight.push_back(i);
      } else {
        nontight_labels.insert(i);
      }
    }
    for (int j = 1; j <= k; ++j) {
      if (y(j - 1) == 0) {
        tight.push_back(m + j);
      } else {
        nontight_labels.insert(labels[m + j - 1]);
      }
    }
    if (static_cast<int>(tight.size()) != k || static_cast<int>(nontight_labels.size()) != m) {
      fail(ErrorCode::VerificationFailed, "vertex " + format_vector(y) + " is not on exactly " + std::to_string(k) + " facets");
    }
    Vertex v = vertex_solve(P, tight);
    if (v.x != y) fail(ErrorCode::VerificationFailed, "tight constraints do not determine " + format_vector(y));
    out.rooms.push_back(tight);
    out.vertices.push_back({tight, std::move(v.x), v.sigma});

    int i = m;
    while (i >= 1 && ++choice[i] > L[i].size()) choice[i--] = 0;
    if (i == 0) break;
  }
  std::vector<Room> mine = out.rooms;
  std::sort(mine.begin(), mine.end());
  if (std::adjacent_find(mine.begin(), mine.end()) != mine.end() || mine != oik.rooms) {
    fail(ErrorCode::VerificationFailed, "vertices and Sperner rooms do not correspond");
  }
  return out;
}

Rational parse_rational(const std::string& token) {
  const auto slash = token.find('/');
  auto integer = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos ||
        s.find_first_of("+-", 1) != std::string::npos || s == "+" || s == "-") {
      fail(ErrorCode::Parse, "bad rational '" + token + "'");
    }
    return boost::multiprecision::cpp_int(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(integer(token));
  const auto num = integer(token.substr(0, slash));
  const auto den = integer(token.substr(slash + 1));
  if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + token + "'");
  return Rational(num, den);
}

LabeledPolytope parse_polytope(std::istream& in) {
  const auto lines = detail::read_token_lines(in);
  if (lines.empty()) detail::parse_fail(0, "empty input");
  detail::expect_header(lines[0], "polytope", 2);
  const long long m = detail::parse_integer(lines[0].tokens[1], lines[0].line_no);
  const long long n = detail::parse_integer(lines[0].tokens[2], lines[0].line_no);
  if (m < 1 || m > 64 || n < 0 || n > 4096) detail::parse_fail(lines[0].line_no, "dimensions out of range");
  if (static_cast<long long>(lines.size()) - 1 != n) {
    detail::parse_fail(lines.back().line_no, "expected " + std::to_string(n) + " constraints");
  }
  RationalMatrix a(n, m);
  RationalVector b(n);
  std::vector<int> labels;
  for (long long j = 0; j < n; ++j) {
    const auto& tl = lines[j + 1];
    if (static_cast<long long>(tl.tokens.size()) != m + 2) {
      detail::parse_fail(tl.line_no, "expected label, bound and " + std::to_string(m) + " coefficients");
    }
    const long long l = detail::parse_integer(tl.tokens[0], tl.line_no);
    if (l < 1 || l > m) detail::parse_fail(tl.line_no, "label out of range");
    labels.push_back(static_cast<int>(l));
    try {
      b(j) = parse_rational(tl.tokens[1]);
      for (long long c = 0; c < m; ++c) a(j, c) = parse_rational(tl.tokens[c + 2]);
    } catch (const Error& e) {
      detail::parse_fail(tl.line_no, e.what());
    }
  }
  return make_polytope(std::move(a), std::move(b), std::move(labels));
}

LabeledPolytope parse_polytope(const std::string& text) {
  std::istringstream in(text);
  return parse_polytope(in);
}

std::string format_polytope(const LabeledPolytope& P) {
  std::ostringstream os;
  os << "polytope " << P.dim() << ' ' << P.constraint_count() << '\n';
  for (int j = 0; j < P.constraint_count(); ++j) {
    os << P.labels[j] << ' ' << P.b(j).str();
    for (int c = 0; c < P.dim(); ++c) os << ' ' << P.a(j, c).str();
    os << '\n';
  }
  return os.str();
}

std::string format_vector(const RationalVector& x) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) out += (i ? "," : "") + x(i).str();
  return out + ")";
}

}  // namespace eulerpiv

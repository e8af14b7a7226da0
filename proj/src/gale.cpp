#include "eulerpiv/gale.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "text_util.hpp"

namespace eulerpiv {

namespace {

int wrap(int j, int n) { return ((j % n) + n) % n; }

void check_string(const GaleString& g, int n) {
  if (static_cast<int>(g.size()) != n || g.find_first_not_of("01") != std::string::npos) {
    fail(ErrorCode::BadParams, "'" + g + "' is not a bit string of length " + std::to_string(n));
  }
}

}  // namespace

bool is_gale(const GaleString& g) {
  const int n = static_cast<int>(g.size());
  const auto zero = g.find('0');
  if (zero == std::string::npos) return false;
  int run = 0;
  for (int k = 1; k <= n; ++k) {
    if (g[wrap(static_cast<int>(zero) + k, n)] == '1') {
      ++run;
    } else {
      if (run % 2 != 0) return false;
      run = 0;
    }
  }
  return true;
}

std::vector<GaleString> enumerate_gale(int m, int n) {
  if (m < 2 || m % 2 != 0) fail(ErrorCode::BadParams, "m must be even and positive");
  if (n <= m || n > 24) fail(ErrorCode::BadParams, "need m < n <= 24");
  std::vector<GaleString> out;
  GaleString g(n - m, '0');
  g += std::string(m, '1');
  do {
    if (is_gale(g)) out.push_back(g);
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

GaleLabeling make_gale_labeling(int m, std::vector<int> labels) {
  if (m < 1) fail(ErrorCode::BadParams, "m must be positive");
  for (int l : labels) {
    if (l < 1 || l > m) fail(ErrorCode::BadParams, "label " + std::to_string(l) + " out of range");
  }
  return GaleLabeling{m, std::move(labels)};
}

Digraph derived_graph(const GaleLabeling& l) {
  const int n = l.n();
  std::vector<Edge> edges;
  for (int j = 0; j < n; ++j) {
    const int a = l.labels[j];
    const int b = l.labels[wrap(j + 1, n)];
    if (a == b) {
      fail(ErrorCode::LoopCreated, "positions " + std::to_string(j + 1) + " and " + std::to_string(wrap(j + 1, n) + 1) +
                                       " share label " + std::to_string(a));
    }
    edges.push_back({a, b});
  }
  return Digraph(l.m, std::move(edges));
}

Matching gale_to_matching(const GaleString& g, const GaleLabeling& l) {
  const int n = l.n();
  check_string(g, n);
  const auto zero = g.find('0');
  if (zero == std::string::npos) fail(ErrorCode::OddRun, "string has no 0");
  std::vector<EdgeIndex> edges;
  int run_start = -1;
  int run = 0;
  for (int k = 1; k <= n; ++k) {
    const int j = wrap(static_cast<int>(zero) + k, n);
    if (g[j] == '1') {
      if (run++ == 0) run_start = j;
      if (run % 2 == 0) edges.push_back(static_cast<EdgeIndex>(wrap(j - 1, n)));
    } else {
      if (run % 2 != 0) fail(ErrorCode::OddRun, "run of odd length at position " + std::to_string(run_start + 1));
      run = 0;
    }
  }
  return Matching(std::move(edges));
}

bool is_completely_labeled(const GaleString& g, const GaleLabeling& l) {
  std::vector<int> labels;
  for (int j = 0; j < l.n(); ++j) {
    if (g[j] == '1') labels.push_back(l.labels[j]);
  }
  return static_cast<int>(labels.size()) == l.m && classify_labels(labels).is_cl();
}

std::vector<int> GaleSystem::representation(const State& g) const {
  std::vector<int> rep;
  for (int j = 0; j < static_cast<int>(g.size()); ++j) {
    if (g[j] == '1') rep.push_back(j + 1);
  }
  return rep;
}

PivotStep<GaleSystem::State> GaleSystem::pivot(const State& g, int i) const {
  const int n = l_.n();
  const std::vector<int> rep = representation(g);
  if (i < 0 || i >= static_cast<int>(rep.size())) fail(ErrorCode::BadPosition, "position out of range");
  const int j = rep[i] - 1;
  int left = 0, right = 0;
  while (g[wrap(j - left - 1, n)] == '1') ++left;
  while (g[wrap(j + right + 1, n)] == '1') ++right;
  // one of the two remainders of the run is odd; extend it on its far side
  const int u = left % 2 != 0 ? wrap(j - left - 1, n) : wrap(j + right + 1, n);

  PivotStep<State> step{g, std::vector<int>(rep.size())};
  step.next[j] = '0';
  step.next[u] = '1';
  const std::vector<int> next_rep = representation(step.next);
  for (std::size_t k = 0; k < rep.size(); ++k) {
    const int v = k == static_cast<std::size_t>(i) ? u + 1 : rep[k];
    step.pi[k] = static_cast<int>(std::lower_bound(next_rep.begin(), next_rep.end(), v) - next_rep.begin());
  }
  return step;
}

std::uint64_t GaleSystem::state_count() const {
  long double c = 1;
  for (int k = 1; k <= l_.m; ++k) c = c * (l_.n() - l_.m + k) / k;
  return static_cast<std::uint64_t>(c + 0.5L);
}

PathResult<GaleString> gale_pivot_path(const GaleString& g, const GaleLabeling& l, int w, PathOptions options) {
  check_string(g, l.n());
  if (!is_gale(g) || static_cast<int>(std::count(g.begin(), g.end(), '1')) != l.m) {
    fail(ErrorCode::BadParams, "'" + g + "' is not in G(" + std::to_string(l.m) + "," + std::to_string(l.n()) + ")");
  }
  GaleSystem sys(l);
  return follow_path(sys, g, w, options);
}

GaleLabeling parse_gale(std::istream& in) {
  const auto lines = detail::read_token_lines(in);
  if (lines.empty()) detail::parse_fail(0, "empty input");
  detail::expect_header(lines[0], "gale", 2);
  const long long m = detail::parse_integer(lines[0].tokens[1], lines[0].line_no);
  const long long n = detail::parse_integer(lines[0].tokens[2], lines[0].line_no);
  if (m < 1 || m > 64 || n < 1 || n > 4096) detail::parse_fail(lines[0].line_no, "dimensions out of range");
  std::vector<int> labels;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    for (const auto& tok : lines[k].tokens) {
      const long long v = detail::parse_integer(tok, lines[k].line_no);
      if (v < 1 || v > m) detail::parse_fail(lines[k].line_no, "label out of range");
      labels.push_back(static_cast<int>(v));
    }
  }
  if (static_cast<long long>(labels.size()) != n) {
    detail::parse_fail(lines.back().line_no, "expected " + std::to_string(n) + " labels");
  }
  return GaleLabeling{static_cast<int>(m), std::move(labels)};
}

GaleLabeling parse_gale(const std::string& text) {
  std::istringstream in(text);
  return parse_gale(in);
}

std::string format_gale(const GaleLabeling& l) {
  std::ostringstream os;
  os << "gale " << l.m << ' ' << l.n() << '\n';
  for (int j = 0; j < l.n(); ++j) os << (j ? " " : "") << l.labels[j];
  os << '\n';
  return os.str();
}

}  // namespace eulerpiv

#pragma once

// Labeled pivoting systems and complementary pivoting.
//
// A system exposes states with an m-tuple representation over nodes, a pivot
// that replaces one position and reports the permutation pi with
// r(t)[pi[k]] = (r(s) | i -> u)[k], node labels in 1..m and, optionally, an
// orientation. Positions are 0-based throughout.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eulerpiv/common.hpp"
#include "eulerpiv/graph.hpp"

namespace eulerpiv {

template <typename State>
struct PivotStep {
  State next;
  std::vector<int> pi;
};

template <typename S>
concept PivotingSystem =
    std::totally_ordered<typename S::State> && std::copyable<typename S::State> &&
    requires(const S& sys, const typename S::State& s, int i, int v) {
      { sys.arity() } -> std::convertible_to<int>;
      { sys.representation(s) } -> std::convertible_to<std::vector<int>>;
      { sys.pivot(s, i) } -> std::same_as<PivotStep<typename S::State>>;
      { sys.label(v) } -> std::convertible_to<int>;
      { sys.state_name(s) } -> std::convertible_to<std::string>;
    };

template <typename S>
concept OrientedPivotingSystem = PivotingSystem<S> && requires(const S& sys, const typename S::State& s) {
  { sys.orientation(s) } -> std::same_as<Sign>;
};

template <typename S>
concept CountedPivotingSystem = PivotingSystem<S> && requires(const S& sys) {
  { sys.state_count() } -> std::convertible_to<std::uint64_t>;
};

struct StateClass {
  enum class Kind { CL, ACL, Other };
  Kind kind = Kind::Other;
  int missing = 0;  // ACL only
  int first = -1;   // duplicate positions, first < second
  int second = -1;

  bool is_cl() const { return kind == Kind::CL; }
  bool is_acl() const { return kind == Kind::ACL; }
  friend bool operator==(const StateClass&, const StateClass&) = default;
};

/// Classification of a label tuple with entries in 1..m.
inline StateClass classify_labels(const std::vector<int>& labels) {
  const int m = static_cast<int>(labels.size());
  std::vector<int> first_at(m + 1, -1);
  StateClass c;
  int duplicates = 0;
  for (int p = 0; p < m; ++p) {
    const int l = labels[p];
    if (l < 1 || l > m) return c;
    if (first_at[l] < 0) {
      first_at[l] = p;
    } else {
      ++duplicates;
      c.first = first_at[l];
      c.second = p;
    }
  }
  if (duplicates == 0) {
    c.kind = StateClass::Kind::CL;
    c.first = c.second = -1;
    return c;
  }
  if (duplicates > 1) return StateClass{};
  c.kind = StateClass::Kind::ACL;
  for (int l = 1; l <= m; ++l) {
    if (first_at[l] < 0) c.missing = l;
  }
  return c;
}

template <PivotingSystem S>
std::vector<int> labels_of(const S& sys, const typename S::State& s) {
  std::vector<int> labels;
  for (int v : sys.representation(s)) labels.push_back(sys.label(v));
  return labels;
}

template <PivotingSystem S>
StateClass classify(const S& sys, const typename S::State& s) {
  return classify_labels(labels_of(sys, s));
}

namespace detail {

inline Sign relabeled_parity(std::vector<int> labels, std::optional<int> pos, int w) {
  if (pos) labels[*pos] = w;
  return permutation_parity(labels);
}

}  // namespace detail

/// sign(s) for a CL state, sign(s, pos) for an ACL state at a duplicate position.
/// Throws WrongClass or BadPosition.
template <OrientedPivotingSystem S>
Sign state_sign(const S& sys, const typename S::State& s, std::optional<int> pos = std::nullopt) {
  const auto labels = labels_of(sys, s);
  const StateClass c = classify_labels(labels);
  if (!pos) {
    if (!c.is_cl()) fail(ErrorCode::WrongClass, "state " + sys.state_name(s) + " is not CL");
    return sys.orientation(s) * permutation_parity(labels);
  }
  if (c.is_cl()) {
    if (*pos < 0 || *pos >= sys.arity()) fail(ErrorCode::BadPosition, "position out of range");
    return sys.orientation(s) * permutation_parity(labels);
  }
  if (!c.is_acl()) fail(ErrorCode::WrongClass, "state " + sys.state_name(s) + " is neither CL nor ACL");
  if (*pos != c.first && *pos != c.second) {
    fail(ErrorCode::BadPosition, "position " + std::to_string(*pos) + " does not hold the duplicate label");
  }
  return sys.orientation(s) * detail::relabeled_parity(labels, pos, c.missing);
}

template <typename State>
struct PathResult {
  State start;
  State end;
  std::uint64_t steps = 0;
  std::vector<State> states;  // start, intermediates, end
  std::vector<std::string> trace;
  bool oriented = false;
  Sign start_sign;
  Sign end_sign;
  /// sign(s, i) = -sign(t, pi(i)) on every pivot and the switch rule held.
  bool signs_consistent = true;
};

struct PathOptions {
  std::optional<std::uint64_t> step_cap;
  bool trace = false;
};

inline constexpr std::uint64_t kDefaultStepCap = 10'000'000;

namespace detail {

inline std::string format_perm(const std::vector<int>& pi) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < pi.size(); ++k) os << (k ? "," : "") << pi[k] + 1;
  os << ')';
  return os.str();
}

}  // namespace detail

/// Complementary pivoting from a CL state with missing label w until the
/// next CL state. Throws NotCL and StepLimitExceeded.
template <PivotingSystem S>
PathResult<typename S::State> follow_path(const S& sys, const typename S::State& start, int w,
                                          PathOptions options = {}) {
  using State = typename S::State;
  constexpr bool kOriented = OrientedPivotingSystem<S>;
  const int m = sys.arity();
  auto labels = labels_of(sys, start);
  if (!classify_labels(labels).is_cl()) fail(ErrorCode::NotCL, "start " + sys.state_name(start) + " is not CL");
  if (w < 1 || w > m) fail(ErrorCode::BadParams, "missing label " + std::to_string(w) + " out of range");

  std::uint64_t cap = kDefaultStepCap;
  if (options.step_cap) {
    cap = *options.step_cap;
  } else if constexpr (CountedPivotingSystem<S>) {
    cap = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(sys.state_count()) * m);
  }

  PathResult<State> result;
  result.start = start;
  result.end = start;
  result.states.push_back(start);
  result.oriented = kOriented;
  int pos = static_cast<int>(std::find(labels.begin(), labels.end(), w) - labels.begin());
  State s = start;
  Sign drop_sign;  // sign(s, pos)
  if constexpr (kOriented) {
    result.start_sign = state_sign(sys, start);
    drop_sign = result.start_sign;
  }

  for (;;) {
    if (result.steps >= cap) {
      fail(ErrorCode::StepLimitExceeded, "no CL state after " + std::to_string(cap) + " pivots");
    }
    PivotStep<State> step = sys.pivot(s, pos);
    ++result.steps;
    const int entered = step.pi.at(pos);
    auto next_labels = labels_of(sys, step.next);
    const StateClass c = classify_labels(next_labels);

    if (options.trace) {
      std::ostringstream os;
      os << "step " << result.steps << ": drop pos " << pos + 1 << " -> state " << sys.state_name(step.next)
         << " pi=" << detail::format_perm(step.pi);
      if constexpr (kOriented) os << " sigma=" << sys.orientation(step.next);
      result.trace.push_back(os.str());
    }
    if constexpr (kOriented) {
      const Sign switched = -sys.orientation(s) * permutation_parity(step.pi);
      if (sys.orientation(step.next) != switched) result.signs_consistent = false;
      const Sign arrive = sys.orientation(step.next) * detail::relabeled_parity(next_labels, entered, w);
      if (arrive != -drop_sign) result.signs_consistent = false;
      drop_sign = -arrive;
    }
    result.states.push_back(step.next);
    s = step.next;

    if (c.is_cl()) break;
    if (!c.is_acl() || c.missing != w || (c.first != entered && c.second != entered)) {
      fail(ErrorCode::Internal, "pivot left the path at state " + sys.state_name(s));
    }
    pos = c.first == entered ? c.second : c.first;
  }

  result.end = s;
  if constexpr (kOriented) result.end_sign = state_sign(sys, s);
  return result;
}

template <typename State>
struct ClPairing {
  std::vector<std::pair<State, State>> pairs;
  std::size_t plus = 0;
  std::size_t minus = 0;
  bool all_opposite = true;
};

/// Pairs the given CL states as path endpoints for missing label w.
template <PivotingSystem S>
ClPairing<typename S::State> pair_all_cl_states(const S& sys, int w,
                                                const std::vector<typename S::State>& cl_states,
                                                PathOptions options = {}) {
  using State = typename S::State;
  ClPairing<State> out;
  std::set<State> known(cl_states.begin(), cl_states.end());
  std::set<State> done;
  for (const State& s : cl_states) {
    if (done.count(s)) continue;
    const auto path = follow_path(sys, s, w, options);
    if (!known.count(path.end)) {
      fail(ErrorCode::Internal, "path from " + sys.state_name(s) + " ends outside the given CL states");
    }
    if (done.count(path.end) || path.end == s) {
      fail(ErrorCode::Internal, "path endpoints are not a matching of CL states");
    }
    done.insert(s);
    done.insert(path.end);
    out.pairs.emplace_back(s, path.end);
    if constexpr (OrientedPivotingSystem<S>) {
      for (Sign sg : {path.start_sign, path.end_sign}) (sg.positive() ? out.plus : out.minus)++;
      if (path.start_sign == path.end_sign) out.all_opposite = false;
    }
  }
  return out;
}

/// A pivoting system given by explicit tables.
class TableSystem {
 public:
  using State = int;

  TableSystem(int arity, std::vector<int> node_labels) : arity_(arity), labels_(std::move(node_labels)) {}

  /// Representation uses node ids 0..labels.size()-1.
  int add_state(std::vector<int> representation, std::optional<Sign> orientation = std::nullopt,
                std::string name = {}) {
    reps_.push_back(std::move(representation));
    orientation_.push_back(orientation.value_or(Sign::plus()));
    names_.push_back(name.empty() ? "s" + std::to_string(reps_.size() - 1) : std::move(name));
    return static_cast<int>(reps_.size()) - 1;
  }

  /// Declares f(s, i) = t with the given pi; the reverse pivot is derived.
  void add_pivot(int s, int i, int t, std::vector<int> pi) {
    std::vector<int> inverse(pi.size());
    for (std::size_t k = 0; k < pi.size(); ++k) inverse[pi[k]] = static_cast<int>(k);
    table_[{t, pi[i]}] = {s, inverse};
    table_[{s, i}] = {t, std::move(pi)};
  }

  int arity() const { return arity_; }
  std::vector<int> representation(int s) const { return reps_.at(s); }
  int label(int v) const { return labels_.at(v); }
  Sign orientation(int s) const { return orientation_.at(s); }
  std::uint64_t state_count() const { return reps_.size(); }
  std::string state_name(int s) const { return names_.at(s); }

  PivotStep<int> pivot(int s, int i) const {
    auto it = table_.find({s, i});
    if (it == table_.end()) {
      fail(ErrorCode::BadParams, "no pivot from " + names_.at(s) + " at position " + std::to_string(i));
    }
    return it->second;
  }

 private:
  int arity_;
  std::vector<int> labels_;
  std::vector<std::vector<int>> reps_;
  std::vector<Sign> orientation_;
  std::vector<std::string> names_;
  std::map<std::pair<int, int>, PivotStep<int>> table_;
};

}  // namespace eulerpiv

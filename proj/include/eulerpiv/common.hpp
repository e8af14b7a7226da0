#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerpiv {

/// A value in {-1, +1}: orientations, parities and signs of states.
class Sign {
 public:
  constexpr Sign() = default;

  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }

  /// Throws std::invalid_argument unless v is -1 or +1.
  static Sign from_int(int v);

  constexpr int value() const { return value_; }
  constexpr bool positive() const { return value_ > 0; }

  friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.value_ * b.value_); }
  friend constexpr Sign operator-(Sign a) { return Sign(-a.value_); }
  friend constexpr bool operator==(Sign a, Sign b) = default;
  Sign& operator*=(Sign other) {
    value_ *= other.value_;
    return *this;
  }

 private:
  constexpr explicit Sign(int v) : value_(static_cast<std::int8_t>(v)) {}
  std::int8_t value_ = 1;
};

std::ostream& operator<<(std::ostream& os, Sign s);
/// "+1" or "-1".
std::string to_string(Sign s);

enum class ErrorCode {
  Parse,
  DuplicateEntry,
  NotPerfectMatching,
  NotEulerian,
  NotAlternating,
  TooLarge,
  AlreadyInitialized,
  Uninitialized,
  SameClass,
  PreconditionViolated,
  NotBipartite,
  SourceOrSink,
  WrongClass,
  BadPosition,
  NotCL,
  StepLimitExceeded,
  NotOrientable,
  NeedExplicitOrientation,
  IncoherentOrientation,
  MixedUniverse,
  NotAPartition,
  NotSurjective,
  BadParams,
  Singular,
  NotAVertex,
  Degenerate,
  Unbounded,
  NotBounded,
  VerificationFailed,
  BadLabeling,
  LoopCreated,
  OddRun,
  InvariantViolation,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Broad category used for process exit codes: 1 parse, 2 precondition, 3 internal.
enum class ErrorKind { Parse = 1, Precondition = 2, Internal = 3 };

ErrorKind kind_of(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_of(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection, so that seeded streams do not
/// depend on the standard library's distribution implementation.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform integer in [lo, hi].
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

/// Fisher-Yates shuffle driven by uniform_below.
template <typename Container>
void shuffle(Container& c, Rng& rng) {
  for (std::size_t i = c.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    using std::swap;
    swap(c[i - 1], c[j]);
  }
}

}  // namespace eulerpiv

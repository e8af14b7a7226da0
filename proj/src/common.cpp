#include "eulerpiv/common.hpp"

#include <limits>

namespace eulerpiv {

Sign Sign::from_int(int v) {
  if (v != 1 && v != -1) {
    throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(v));
  }
  return Sign(v);
}

std::ostream& operator<<(std::ostream& os, Sign s) { return os << to_string(s); }

std::string to_string(Sign s) { return s.positive() ? "+1" : "-1"; }

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::NotPerfectMatching: return "NotPerfectMatching";
    case ErrorCode::NotEulerian: return "NotEulerian";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::AlreadyInitialized: return "AlreadyInitialized";
    case ErrorCode::Uninitialized: return "Uninitialized";
    case ErrorCode::SameClass: return "SameClass";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::SourceOrSink: return "SourceOrSink";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::BadPosition: return "BadPosition";
    case ErrorCode::NotCL: return "NotCL";
    case ErrorCode::StepLimitExceeded: return "StepLimitExceeded";
    case ErrorCode::NotOrientable: return "NotOrientable";
    case ErrorCode::NeedExplicitOrientation: return "NeedExplicitOrientation";
    case ErrorCode::IncoherentOrientation: return "IncoherentOrientation";
    case ErrorCode::MixedUniverse: return "MixedUniverse";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::BadLabeling: return "BadLabeling";
    case ErrorCode::LoopCreated: return "LoopCreated";
    case ErrorCode::OddRun: return "OddRun";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

ErrorKind kind_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
      return ErrorKind::Parse;
    case ErrorCode::PreconditionViolated:
    case ErrorCode::VerificationFailed:
    case ErrorCode::InvariantViolation:
    case ErrorCode::Internal:
      return ErrorKind::Internal;
    default:
      return ErrorKind::Precondition;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace eulerpiv

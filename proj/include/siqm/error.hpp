#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace siqm {

enum class ErrorKind {
  InvalidRange,
  TooFewPoints,
  GridMismatch,
  InvalidParameter,
  OutOfDomain,
  NonNormalizable,
  HorizonExceeded,
  LevelNotBound,
  UnderResolved,
  EigensolverFailure,
  UnknownRelation,
  WindowTooSmall,
  SingularHamiltonian,
  DegenerateLevels,
  TruncationOverflow,
  StepInstability,
  NumericalFailure,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the CLI can map it to
// an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Validation errors are caller mistakes; everything else is a numerical failure.
  bool is_validation() const noexcept {
    switch (kind_) {
      case ErrorKind::InvalidRange:
      case ErrorKind::TooFewPoints:
      case ErrorKind::GridMismatch:
      case ErrorKind::InvalidParameter:
      case ErrorKind::OutOfDomain:
      case ErrorKind::UnknownRelation:
      case ErrorKind::WindowTooSmall:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidRange: return "invalid-range";
    case ErrorKind::TooFewPoints: return "too-few-points";
    case ErrorKind::GridMismatch: return "grid-mismatch";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::OutOfDomain: return "out-of-domain";
    case ErrorKind::NonNormalizable: return "non-normalizable";
    case ErrorKind::HorizonExceeded: return "horizon-exceeded";
    case ErrorKind::LevelNotBound: return "level-not-bound";
    case ErrorKind::UnderResolved: return "under-resolved";
    case ErrorKind::EigensolverFailure: return "eigensolver-failure";
    case ErrorKind::UnknownRelation: return "unknown-relation";
    case ErrorKind::WindowTooSmall: return "window-too-small";
    case ErrorKind::SingularHamiltonian: return "singular-H";
    case ErrorKind::DegenerateLevels: return "degenerate-levels";
    case ErrorKind::TruncationOverflow: return "truncation-overflow";
    case ErrorKind::StepInstability: return "step-instability";
    case ErrorKind::NumericalFailure: return "numerical-failure";
  }
  return "unknown";
}

// Non-fatal diagnostics (boundary decay, edge contamination). The sink is
// thread-local so concurrent callers never share it.
namespace diagnostics {

using Sink = void (*)(std::string_view message, void* user);

void warn(std::string_view message);

// Installs a sink for the current thread and restores the previous one on exit.
class ScopedSink {
 public:
  ScopedSink(Sink sink, void* user);
  ~ScopedSink();
  ScopedSink(const ScopedSink&) = delete;
  ScopedSink& operator=(const ScopedSink&) = delete;

 private:
  Sink previous_sink_;
  void* previous_user_;
};

}  // namespace diagnostics
}  // namespace siqm

#pragma once

#include <stdexcept>
#include <string>

namespace mqs {

/// Failure categories surfaced by the library. The CLI maps them onto exit
/// statuses: input problems exit with 2, numerical breakdowns with 1.
enum class ErrorKind {
  CollinearPoints,
  CoincidentEndpoints,
  NoRootInUnitInterval,
  DomainError,
  DegenerateCurve,
  ZeroSpeed,
  QuadratureDivergence,
  TooFewPoints,
  InvalidKnots,
  IndexOutOfRange,
  ParseError,
  ValidationError,
  IOError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CollinearPoints: return "CollinearPoints";
    case ErrorKind::CoincidentEndpoints: return "CoincidentEndpoints";
    case ErrorKind::NoRootInUnitInterval: return "NoRootInUnitInterval";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::ZeroSpeed: return "ZeroSpeed";
    case ErrorKind::QuadratureDivergence: return "QuadratureDivergence";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::InvalidKnots: return "InvalidKnots";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IOError: return "IOError";
  }
  return "Unknown";
}

/// True for errors caused by the caller's input rather than by numerics.
inline bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoRootInUnitInterval:
    case ErrorKind::QuadratureDivergence:
    case ErrorKind::ZeroSpeed:
      return false;
    default:
      return true;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mqs

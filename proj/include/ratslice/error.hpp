#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratslice {

enum class ErrorKind {
  DegenerateMap,
  PoleEvaluation,
  BetaZero,
  NotACycle,
  SingularParameter,
  LambdaEqualsDegree,
  DegenerateT,
  NoSolution,
  PoleAtMinusI,
  InvalidArgument,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// that callers (the renderer, the CLI) can map it to a label or exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateMap: return "DegenerateMap";
    case ErrorKind::PoleEvaluation: return "PoleEvaluation";
    case ErrorKind::BetaZero: return "BetaZero";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::SingularParameter: return "SingularParameter";
    case ErrorKind::LambdaEqualsDegree: return "LambdaEqualsDegree";
    case ErrorKind::DegenerateT: return "DegenerateT";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::PoleAtMinusI: return "PoleAtMinusI";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ratslice

#pragma once

#include <stdexcept>
#include <string>

namespace commap {

enum class ErrorCode {
  MalformedCatalog,
  UnknownAlgebra,
  InvalidParameters,
  NotSimple,
  UnsupportedRealization,
  MismatchedAlgebras,
  DegenerateForm,
  NotSubalgebra,
  MaximalityFailure,
  RankMismatch,
  RegularityExhausted,
  ReflectionFailure,
  ConvergenceFailure,
  SolveFailure,
  OpenCaseUnsupported,
  NotInKKplusP,
  WrongFlags,
  BadInput,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedCatalog: return "MalformedCatalog";
    case ErrorCode::UnknownAlgebra: return "UnknownAlgebra";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::UnsupportedRealization: return "UnsupportedRealization";
    case ErrorCode::MismatchedAlgebras: return "MismatchedAlgebras";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NotSubalgebra: return "NotSubalgebra";
    case ErrorCode::MaximalityFailure: return "MaximalityFailure";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::RegularityExhausted: return "RegularityExhausted";
    case ErrorCode::ReflectionFailure: return "ReflectionFailure";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::SolveFailure: return "SolveFailure";
    case ErrorCode::OpenCaseUnsupported: return "OpenCaseUnsupported";
    case ErrorCode::NotInKKplusP: return "NotInKKplusP";
    case ErrorCode::WrongFlags: return "WrongFlags";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

/// Library error. Every failure path throws this with a typed code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a descent exhausts its restart budget; carries the best value reached.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : Error(ErrorCode::ConvergenceFailure,
              what + " (best residual " + std::to_string(best_residual) + ")"),
        best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace commap

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mmp {

enum class ErrorCode {
  ZeroVector,
  EmptyFeasible,
  DimensionMismatch,
  DifferentFields,
  NotSquareFree,
  DivisionByZero,
  InvalidFan,
  NonIntegralDivisor,
  EmptyLinearSystem,
  OutsideSupport,
  NotKlt,
  NonEffective,
  NotCartier,
  NotNefBig,
  AlreadyNef,
  BoundViolation,
  DegreeMismatch,
  NotExtremal,
  NotNegative,
  NotFlipping,
  FlipVerificationFailed,
  ContractionFailed,
  NotSaturated,
  ClaimViolation,
  InsufficientHorizon,
  InvalidSequence,
  SNotIrreducible,
  InvalidInstance,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mmp

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace reebsnake {

/// Every failure the library can report. The CLI maps each one to a
/// distinct exit status (see tools/run.cpp).
enum class ErrorCode {
  ParseError,
  NotVanishingAtOrigin,
  InvalidDirection,
  InvalidArgument,
  ZeroPolynomial,
  BothConstantInY,
  ConstantInY,
  DegreeTooSmall,
  NonReducedPolar,
  EventAtZero,
  DegenerateTangency,
  XAtEvent,
  NonGenericTie,
  VerticalAsymptote,
  UnboundedComponent,
  NotAsymptotic,
  BranchOrderMismatch,
  AlternationViolation,
  EndpointNotValley,
  NoStabilization,
  InconsistentTransitions,
  EmptySide,
  TieDetected,
  OrderMismatch,
  NotAPermutation,
  NonGenericInflection,
  NonGenericBitangent,
  NonGenericBoth,
  IOError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace reebsnake

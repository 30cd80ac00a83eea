#include "reebsnake/error.hpp"

namespace reebsnake {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotVanishingAtOrigin: return "NotVanishingAtOrigin";
    case ErrorCode::InvalidDirection: return "InvalidDirection";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::BothConstantInY: return "BothConstantInY";
    case ErrorCode::ConstantInY: return "ConstantInY";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NonReducedPolar: return "NonReducedPolar";
    case ErrorCode::EventAtZero: return "EventAtZero";
    case ErrorCode::DegenerateTangency: return "DegenerateTangency";
    case ErrorCode::XAtEvent: return "XAtEvent";
    case ErrorCode::NonGenericTie: return "NonGenericTie";
    case ErrorCode::VerticalAsymptote: return "VerticalAsymptote";
    case ErrorCode::UnboundedComponent: return "UnboundedComponent";
    case ErrorCode::NotAsymptotic: return "NotAsymptotic";
    case ErrorCode::BranchOrderMismatch: return "BranchOrderMismatch";
    case ErrorCode::AlternationViolation: return "AlternationViolation";
    case ErrorCode::EndpointNotValley: return "EndpointNotValley";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::InconsistentTransitions: return "InconsistentTransitions";
    case ErrorCode::EmptySide: return "EmptySide";
    case ErrorCode::TieDetected: return "TieDetected";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NonGenericInflection: return "NonGenericInflection";
    case ErrorCode::NonGenericBitangent: return "NonGenericBitangent";
    case ErrorCode::NonGenericBoth: return "NonGenericBoth";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

}  // namespace reebsnake

#include "wignerlift/error.hpp"

namespace wignerlift {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotInTable: return "NotInTable";
    case ErrorCode::DuplicateDomainRay: return "DuplicateDomainRay";
    case ErrorCode::NotProbabilityPreserving: return "NotProbabilityPreserving";
    case ErrorCode::InconsistentTau: return "InconsistentTau";
    case ErrorCode::NonUnimodularK: return "NonUnimodularK";
    case ErrorCode::AmbiguousTau: return "AmbiguousTau";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::InvalidPlan: return "InvalidPlan";
    case ErrorCode::UnknownProposition: return "UnknownProposition";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace wignerlift

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wignerlift {

enum class ErrorCode {
  DimensionMismatch,
  ZeroVector,
  EmptyInput,
  InvalidTolerance,
  RankDeficient,
  NotInTable,
  DuplicateDomainRay,
  NotProbabilityPreserving,
  InconsistentTau,
  NonUnimodularK,
  AmbiguousTau,
  PreconditionFailed,
  InvalidPlan,
  UnknownProposition,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can branch on the kind of violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wignerlift

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rrb {

enum class ErrorCode {
  NotAssociative,
  NoIdentity,
  NotLatinSquare,
  OrderLimitExceeded,
  InvalidAction,
  NotNormal,
  NotRotaBaxter,
  NotAMorphism,
  NotAnIdeal,
  NotInS,
  SearchSpaceTooLarge,
  ExtendedModeRequired,
  NotABrace,
  YBEViolation,
  WellDefinednessViolation,
  InvalidWitness,
  MalformedInput,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message names the offending element, pair or triple where there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Cap violations are reported separately by the CLI (exit code 3).
inline bool is_cap_violation(ErrorCode code) noexcept {
  return code == ErrorCode::OrderLimitExceeded ||
         code == ErrorCode::SearchSpaceTooLarge;
}

}  // namespace rrb

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgcm {

enum class ErrorCode {
  NonPositiveAB,
  ZeroGenerator,
  NegativeExponent,
  Overflow,
  BudgetExceeded,
  ClassNotInSubgroup,
  TrivialSubgroup,
  ZeroGeneratorPair,
  InvalidDN,
  InvalidCurve,
  NonTermination,
  IdentityViolation,
  Disagreement,
  NotFourGen,
  Parse,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library surfaces as this exception. The code is the
/// machine-readable part; what() carries a human-readable detail message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sgcm

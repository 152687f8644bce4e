#pragma once

#include <stdexcept>
#include <string>

namespace fuzzycausal {

/// Machine-readable failure categories. Every library error carries one so
/// callers (and the CLI exit-code mapping) can react without string matching.
enum class ErrorCode {
  OutOfUniverse,
  UniverseMismatch,
  BadCount,
  NotFuzzyAttribute,
  DegenerateAttribute,
  SupportViolation,
  NoOverlap,
  EmptySide,
  ExpressionError,
  RankDeficient,
  DegreeUnsupported,
  ColumnMismatch,
  ColumnMissing,
  GridMissingPoints,
  ZeroDenominator,
  BoundViolated,
  UnknownVariable,
  UnknownLabel,
  InvalidRuleBase,
  NoRuleFired,
  TooManyConfigurations,
  NoRulesFound,
  InvalidArgument,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

const char* error_code_name(ErrorCode code);

}  // namespace fuzzycausal

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfUniverse: return "OutOfUniverse";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::BadCount: return "BadCount";
    case ErrorCode::NotFuzzyAttribute: return "NotFuzzyAttribute";
    case ErrorCode::DegenerateAttribute: return "DegenerateAttribute";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::NoOverlap: return "NoOverlap";
    case ErrorCode::EmptySide: return "EmptySide";
    case ErrorCode::ExpressionError: return "ExpressionError";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DegreeUnsupported: return "DegreeUnsupported";
    case ErrorCode::ColumnMismatch: return "ColumnMismatch";
    case ErrorCode::ColumnMissing: return "ColumnMissing";
    case ErrorCode::GridMissingPoints: return "GridMissingPoints";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::InvalidRuleBase: return "InvalidRuleBase";
    case ErrorCode::NoRuleFired: return "NoRuleFired";
    case ErrorCode::TooManyConfigurations: return "TooManyConfigurations";
    case ErrorCode::NoRulesFound: return "NoRulesFound";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace fuzzycausal

#include "suitescore/error.hpp"

namespace suitescore {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::InvalidCoreCount: return "InvalidCoreCount";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::TooFewAxes: return "TooFewAxes";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::NoFactors: return "NoFactors";
    case ErrorCode::DuplicateFactor: return "DuplicateFactor";
    case ErrorCode::TooManyFactors: return "TooManyFactors";
    case ErrorCode::EmptyAssignments: return "EmptyAssignments";
    case ErrorCode::EmptyBenchmarks: return "EmptyBenchmarks";
    case ErrorCode::ZeroReplicates: return "ZeroReplicates";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::MixedResponses: return "MixedResponses";
    case ErrorCode::UnknownResponse: return "UnknownResponse";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooFewEffects: return "TooFewEffects";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::BadDirection: return "BadDirection";
    case ErrorCode::NonNumericCell: return "NonNumericCell";
    case ErrorCode::DuplicateMetric: return "DuplicateMetric";
    case ErrorCode::UnknownLevel: return "UnknownLevel";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::EmptyEffects: return "EmptyEffects";
    case ErrorCode::EmptyBundle: return "EmptyBundle";
    case ErrorCode::Usage: return "UsageError";
    case ErrorCode::Io: return "IoError";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace suitescore

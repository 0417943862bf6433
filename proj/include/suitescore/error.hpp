#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace suitescore {

enum class ErrorCode {
  EmptyInput,
  NonPositiveValue,
  InvalidCoreCount,
  SchemaMismatch,
  TooFewAxes,
  OutOfRange,
  OrderViolation,
  NoFactors,
  DuplicateFactor,
  TooManyFactors,
  EmptyAssignments,
  EmptyBenchmarks,
  ZeroReplicates,
  EmptyGroup,
  MixedResponses,
  UnknownResponse,
  LengthMismatch,
  TooFewEffects,
  MalformedHeader,
  MalformedRow,
  BadDirection,
  NonNumericCell,
  DuplicateMetric,
  UnknownLevel,
  InvalidSpec,
  EmptyEffects,
  EmptyBundle,
  Usage,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every input or domain failure surfaces as this type; the code is stable,
// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace suitescore

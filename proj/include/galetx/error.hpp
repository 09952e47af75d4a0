#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace galetx {

enum class ErrorCode {
  InvalidField,
  FieldMismatch,
  DimensionMismatch,
  ParseError,
  DivisionByZero,
  NotSquare,
  ZeroPoint,
  DuplicatePoint,
  InvalidSubset,
  ConfigurationTooLarge,
  WrongDegree,
  Degenerate,
  GaleDegenerate,
  GaleNonReduced,
  NotTwoBases,
  FirstBlockNotBasis,
  IsotropicObstruction,
  NotLGP,
  VerificationFailed,
  DegreeOutOfRange,
  TooManyPoints,
  ShapeMismatch,
  NoSolution,
  TooLarge,
  SearchTooLarge,
  RankTwoDrop,
  NoMatch,
  NotBijective,
  LocusIncomplete,
  RetryBudgetExceeded,
};

const char* error_code_name(ErrorCode code);

// Every failure in the library is reported through this type. `indices`
// carries the point labels named by the error (e.g. both rows of a
// DuplicatePoint), empty when the error has no positional payload.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::size_t> indices = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        indices_(std::move(indices)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> indices_;
};

}  // namespace galetx

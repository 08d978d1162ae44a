#pragma once

#include <stdexcept>
#include <string>

namespace pseudomarket {

enum class ErrorCode {
  // input/data errors
  ZeroRow,
  ZeroColumn,
  NegativeUtility,
  DimensionMismatch,
  MassMismatch,
  NegativeResult,
  NotDoublyStochastic,
  ParseError,
  // rule precondition / state errors
  NotSquare,
  NotDichotomous,
  NotBinary,
  EmptyMarket,
  TooLarge,
  ZeroUtilityAgent,
  CertificateInvalid,
  NoPerfectMatching,
  RuleUnavailable,
  Infeasible,
};

const char* error_code_name(ErrorCode code);

/// True for errors caused by malformed input data (as opposed to calling a
/// rule whose preconditions the instance does not meet).
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, long agent = -1, long item = -1)
      : std::runtime_error(std::move(message)), code_(code), agent_(agent), item_(item) {}

  ErrorCode code() const { return code_; }
  long agent() const { return agent_; }
  long item() const { return item_; }

 private:
  ErrorCode code_;
  long agent_;
  long item_;
};

}  // namespace pseudomarket

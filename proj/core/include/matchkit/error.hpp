#pragma once

#include <stdexcept>
#include <string>

namespace matchkit {

enum class ErrorCode {
  LoopEdge,
  VertexOutOfRange,
  EmptyOrFullShore,
  BudgetExhausted,
  ParseError,
  NotMatchable,
  NotMatchingCovered,
  InvalidMatching,
  WrongParity,
  TrivialCut,
  PreconditionViolated,
  NotDegreeTwo,
  ParallelPairAtV,
  TooSmall,
  NotABrick,
  NotASimpleBrick,
  UnknownEdge,
  ReductionStuck,
  BadParams,
  DegreeMismatch,
};

const char* error_code_name(ErrorCode code);

/// The single exception type of the library; `code()` identifies the
/// failure class, the message carries instance details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

inline void require(bool cond, ErrorCode code, const std::string& detail) {
  if (!cond) fail(code, detail);
}

/// Default cap on enumeration sizes (cycles, perfect matchings, search
/// nodes). Exceeding it raises BudgetExhausted instead of hanging.
inline constexpr std::size_t kDefaultBudget = 1'000'000;

}  // namespace matchkit

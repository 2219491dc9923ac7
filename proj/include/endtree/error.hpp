#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace endtree {

// Every failure the library can report. The numeric values are part of the
// C API (see endtree.h) and must not be reordered.
enum class ErrorCode : int {
  kOk = 0,
  kInvalidArgument = 1,
  kUnknownFamily = 2,
  kInvalidParameters = 3,
  kInvalidGraph = 4,
  kUnknownVertex = 5,
  kHorizonSplit = 6,
  kNotCovering = 7,
  kCrossEdge = 8,
  kNoSeparator = 9,
  kDegreeMismatch = 10,
  kExhausted = 11,
  kUnstable = 12,
  kBudget = 13,
  kWrongOrder = 14,
  kSideDisconnected = 15,
  kSeparatorNotAttached = 16,
  kHorizonOnWrongSide = 17,
  kSmallerCutExists = 18,
  kCycleDetected = 19,
  kEmptyNiceSet = 20,
  kNiceSetViolation = 21,
  kNotEnoughLevels = 22,
  kNestednessViolation = 23,
  kOutdegreeViolation = 24,
  kDisconnected = 25,
  kPrecondition = 26,
  kIo = 27,
  kParse = 28,
  kInternal = 29,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace endtree

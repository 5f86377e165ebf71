// Copyright 2026 The portview Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace portview {

enum class ErrorCode {
  kPortOutOfRange,
  kNodeOutOfRange,
  kDisconnectedGraph,
  kDegreeMismatch,
  kParseError,
  kInvariantViolation,
  kOracleBudgetExceeded,
  kParameterOutOfRange,
  kEvenSubdivisionOfSymmetricEdge,
  kHypothesisViolation,
  kTrajectoryMismatch,
  kAssertionFailed,
  kIoError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPortOutOfRange: return "port-out-of-range";
    case ErrorCode::kNodeOutOfRange: return "node-out-of-range";
    case ErrorCode::kDisconnectedGraph: return "disconnected-graph";
    case ErrorCode::kDegreeMismatch: return "degree-mismatch";
    case ErrorCode::kParseError: return "parse-error";
    case ErrorCode::kInvariantViolation: return "invariant-violation";
    case ErrorCode::kOracleBudgetExceeded: return "oracle-budget-exceeded";
    case ErrorCode::kParameterOutOfRange: return "parameter-out-of-range";
    case ErrorCode::kEvenSubdivisionOfSymmetricEdge:
      return "even-subdivision-of-symmetric-edge";
    case ErrorCode::kHypothesisViolation: return "hypothesis-violation";
    case ErrorCode::kTrajectoryMismatch: return "trajectory-mismatch";
    case ErrorCode::kAssertionFailed: return "assertion-failed";
    case ErrorCode::kIoError: return "io-error";
  }
  return "unknown";
}

/// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace portview

// Copyright 2026 The qcmp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcmp/errors.hpp"

namespace qcmp {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kDuplicateTarget: return "DuplicateTarget";
    case ErrorCode::kInvalidCondition: return "InvalidCondition";
    case ErrorCode::kMissingDelayEntry: return "MissingDelayEntry";
    case ErrorCode::kNotACCX: return "NotACCX";
    case ErrorCode::kTooManyQubits: return "TooManyQubits";
    case ErrorCode::kNormDrift: return "NormDrift";
    case ErrorCode::kNonClassicalGate: return "NonClassicalGate";
    case ErrorCode::kInvalidBitstring: return "InvalidBitstring";
    case ErrorCode::kEmptyOperand: return "EmptyOperand";
    case ErrorCode::kUnknownMethod: return "UnknownMethod";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUndeclaredRegister: return "UndeclaredRegister";
    case ErrorCode::kValueTooLarge: return "ValueTooLarge";
    case ErrorCode::kUnsupportedInstruction: return "UnsupportedInstruction";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

SyntaxError::SyntaxError(std::size_t line, std::size_t column,
                         std::string expected, const std::string& found)
    : Error(ErrorCode::kSyntaxError,
            std::to_string(line) + ":" + std::to_string(column) +
                ": expected " + expected + ", found " +
                (found.empty() ? std::string("end of input")
                               : "'" + found + "'")),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace qcmp

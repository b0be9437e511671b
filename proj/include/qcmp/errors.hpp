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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qcmp {

enum class ErrorCode {
  kIndexOutOfRange,
  kArityMismatch,
  kDuplicateTarget,
  kInvalidCondition,
  kMissingDelayEntry,
  kNotACCX,
  kTooManyQubits,
  kNormDrift,
  kNonClassicalGate,
  kInvalidBitstring,
  kEmptyOperand,
  kUnknownMethod,
  kSyntaxError,
  kUndeclaredRegister,
  kValueTooLarge,
  kUnsupportedInstruction,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Base exception for every failure raised by the library. The code is the
/// machine-readable part; what() carries a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected,
              const std::string& found);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

}  // namespace qcmp

// Copyright 2026 The arcforms Authors
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

#ifndef ARCFORMS_ERRORS_H_
#define ARCFORMS_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace arcforms {

enum class ErrorCode {
  kNotPrime,
  kReduciblePolynomial,
  kUnsupportedField,
  kInvalidInput,
  kDivisionByZero,
  kNotSquare,
  kDimensionMismatch,
  kZeroVector,
  kKTooLarge,
  kDependentPoints,
  kIndexOutOfRange,
  kNotAnArc,
  kDegenerateT,
  kTangentCountMismatch,
  kExponentTooLarge,
  kPreconditionFailed,
  kSizeTooSmall,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; `code()`
// identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arcforms

#endif  // ARCFORMS_ERRORS_H_

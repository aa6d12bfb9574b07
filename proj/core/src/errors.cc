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

#include "arcforms/errors.h"

namespace arcforms {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::kUnsupportedField: return "UnsupportedField";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kKTooLarge: return "KTooLarge";
    case ErrorCode::kDependentPoints: return "DependentPoints";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNotAnArc: return "NotAnArc";
    case ErrorCode::kDegenerateT: return "DegenerateT";
    case ErrorCode::kTangentCountMismatch: return "TangentCountMismatch";
    case ErrorCode::kExponentTooLarge: return "ExponentTooLarge";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kSizeTooSmall: return "SizeTooSmall";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace arcforms

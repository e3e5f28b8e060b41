// Copyright 2026 The degstab Authors.
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

#ifndef DEGSTAB_ERROR_HPP
#define DEGSTAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace degstab {

enum class ErrorCode {
  InvalidLength,
  ZeroDirection,
  DependentDirections,
  NotHomogeneous,
  SingularMatrix,
  SyntaxError,
  VariableIndexOutOfRange,
  DimensionMismatch,
  OutOfRange,
  ZeroFunction,
  ZeroOrConstantFunction,
  ClosureViolation,
  NotQuadratic,
  NotSymmetric,
  PreconditionViolated,
  DivisibilityViolated,
  TooManyMonomials,
  UnsupportedCase,
  InconsistentSystem,
  InternalInvariant,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidLength: return "InvalidLength";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::DependentDirections: return "DependentDirections";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::VariableIndexOutOfRange: return "VariableIndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::ZeroOrConstantFunction: return "ZeroOrConstantFunction";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::DivisibilityViolated: return "DivisibilityViolated";
    case ErrorCode::TooManyMonomials: return "TooManyMonomials";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

/// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace degstab

#endif  // DEGSTAB_ERROR_HPP

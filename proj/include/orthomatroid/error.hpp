// Copyright 2026 The Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orthomatroid {

enum class ErrorCode {
  SelfOrthogonal,
  OutOfRange,
  InvalidArgument,
  ResourceLimit,
  NotOrthomatroid,
  NotOrthoindependent,
  NotInClosure,
  NotPropositionalSystem,
  NotSimple,
  NotTransitive,
  ZeroVector,
  DimensionMismatch,
  IsotropicRay,
  ParseError,
  MalformedLattice,
  Internal,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfOrthogonal: return "SelfOrthogonal";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NotOrthomatroid: return "NotOrthomatroid";
    case ErrorCode::NotOrthoindependent: return "NotOrthoindependent";
    case ErrorCode::NotInClosure: return "NotInClosure";
    case ErrorCode::NotPropositionalSystem: return "NotPropositionalSystem";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IsotropicRay: return "IsotropicRay";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MalformedLattice: return "MalformedLattice";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// All library failures are reported through this exception; `code()` is the
/// stable, machine-readable part and `what()` carries the diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orthomatroid

// Copyright 2026 The choi Authors
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

namespace choi {

enum class ErrorKind {
  DimensionMismatch,
  NonFinite,
  NotHermitian,
  ConvergenceFailure,
  NotCompletelyPositive,
  NotTracePreserving,
  NotHermitianPreserving,
  Singular,
  NotTotallyEntangled,
  DifferentChannels,
  NumericalFailure,
  Parse,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NotCompletelyPositive: return "NotCP";
    case ErrorKind::NotTracePreserving: return "NotTP";
    case ErrorKind::NotHermitianPreserving: return "NotHermitianPreserving";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotTotallyEntangled: return "NotTotallyEntangled";
    case ErrorKind::DifferentChannels: return "DifferentChannels";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library. The kind is the
/// machine-readable part; what() carries a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace choi

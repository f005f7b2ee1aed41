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

#include <algorithm>

#include "choi/error.hpp"

namespace choi {

/// Comparison tolerance. The effective threshold at scale s (Frobenius norm
/// of the largest operand) is max(abs, rel * s).
struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-9;

  constexpr Tolerance() = default;
  Tolerance(double abs_tol, double rel_tol) : abs(abs_tol), rel(rel_tol) {
    require(abs >= 0.0 && rel >= 0.0, ErrorKind::InvalidArgument,
            "tolerances must be non-negative");
  }

  double threshold(double scale) const { return std::max(abs, rel * scale); }
};

}  // namespace choi

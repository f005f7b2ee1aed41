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

// Random matrix ensembles used by the positivity falsifier and by tests.

#include <cmath>
#include <cstddef>
#include <random>

#include "choi/linalg.hpp"
#include "choi/matrix.hpp"

namespace choi::random {

/// Independent standard complex normal entries (real and imaginary parts
/// each N(0, 1/2)).
template <class Urbg>
Matrix complex_normal(std::size_t rows, std::size_t cols, Urbg& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix m(rows, cols);
  for (Complex& z : m.data()) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
  }
  return m;
}

/// Unit column vector with complex normal entries.
template <class Urbg>
Matrix unit_vector(std::size_t n, Urbg& rng) {
  Matrix v = complex_normal(n, 1, rng);
  return v / frobenius_norm(v);
}

/// Haar-distributed p x q isometry (p >= q): QR of a Ginibre matrix with the
/// non-negative-diagonal convention.
template <class Urbg>
Matrix isometry(std::size_t p, std::size_t q, Urbg& rng) {
  return qr(complex_normal(p, q, rng)).q;
}

template <class Urbg>
Matrix unitary(std::size_t n, Urbg& rng) {
  return isometry(n, n, rng);
}

/// Random Hermitian matrix (G + G^dagger) / 2.
template <class Urbg>
Matrix hermitian(std::size_t n, Urbg& rng) {
  return hermitian_part(complex_normal(n, n, rng));
}

/// Random positive semidefinite matrix G G^dagger of the given rank.
template <class Urbg>
Matrix positive(std::size_t n, std::size_t rank, Urbg& rng) {
  Matrix g = complex_normal(n, rank, rng);
  return matmul(g, adjoint(g));
}

/// Uniform integer in [lo, hi].
template <class Urbg>
std::size_t integer(std::size_t lo, std::size_t hi, Urbg& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

template <class Urbg>
double uniform(double lo, double hi, Urbg& rng) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace choi::random

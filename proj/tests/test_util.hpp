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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "choi/choi.hpp"

namespace choi::testing {

inline std::string show(const Matrix& a) {
  std::ostringstream os;
  os.precision(6);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << "\n  ";
    for (std::size_t j = 0; j < a.cols(); ++j) os << a(i, j) << ' ';
  }
  return os.str();
}

/// ||a - b||_F <= eps, with both matrices printed on failure.
inline ::testing::AssertionResult near(const Matrix& a, const Matrix& b, double eps) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return ::testing::AssertionFailure() << "shape " << a.rows() << "x" << a.cols() << " vs " << b.rows()
                                         << "x" << b.cols();
  const double d = frobenius_norm(a - b);
  if (d <= eps) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "distance " << d << " > " << eps << show(a) << "\nvs" << show(b);
}

/// Relative version: ||a - b||_F <= eps * max(1, ||b||_F).
inline ::testing::AssertionResult rel_near(const Matrix& a, const Matrix& b, double eps) {
  return near(a, b, eps * std::max(1.0, frobenius_norm(b)));
}

inline bool is_upper_triangular(const Matrix& a, double eps) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < std::min(i, a.cols()); ++j)
      if (std::abs(a(i, j)) > eps) return false;
  return true;
}

inline Matrix pauli_x() { return Matrix{{0.0, 1.0}, {1.0, 0.0}}; }
inline Matrix pauli_y() { return Matrix{{0.0, -kI}, {kI, 0.0}}; }
inline Matrix pauli_z() { return Matrix{{1.0, 0.0}, {0.0, -1.0}}; }

/// Direct operator-sum action sum_x A_x rho A_x^dagger.
inline Matrix kraus_action(const KrausSet& k, const Matrix& rho) {
  Matrix out(k.shape().m, k.shape().m);
  for (const Matrix& a : k.ops()) out += a * rho * adjoint(a);
  return out;
}

/// Choi matrix by brute force: sum_{jl} $(E_jl) (x) E_jl.
inline Matrix choi_by_action(const KrausSet& k) {
  const std::size_t m = k.shape().m, n = k.shape().n;
  Matrix out(m * n, m * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) out += kron(kraus_action(k, Matrix::unit(n, n, j, l)), Matrix::unit(n, n, j, l));
  return out;
}

/// Multiset comparison of complex numbers, greedy nearest matching.
inline bool same_multiset(std::vector<Complex> a, std::vector<Complex> b, double eps) {
  if (a.size() != b.size()) return false;
  for (const Complex& z : a) {
    auto best = std::min_element(b.begin(), b.end(),
                                 [&](const Complex& x, const Complex& y) { return std::abs(x - z) < std::abs(y - z); });
    if (best == b.end() || std::abs(*best - z) > eps) return false;
    b.erase(best);
  }
  return true;
}

inline std::vector<Complex> diagonal_of(const Matrix& a) {
  std::vector<Complex> d;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) d.push_back(a(i, i));
  return d;
}

/// Random mixture of products of random positive operators.
template <class Urbg>
Matrix random_separable(std::size_t m, std::size_t n, std::size_t terms, Urbg& rng) {
  Matrix out(m * n, m * n);
  for (std::size_t t = 0; t < terms; ++t)
    out += random::uniform(0.1, 1.0, rng) *
           kron(random::positive(m, random::integer(1, m, rng), rng), random::positive(n, random::integer(1, n, rng), rng));
  return out;
}

}  // namespace choi::testing

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

// Index machinery on C^m (x) C^n. The composite basis vector |i>|j> sits at
// flat position i*n + j (first factor slow, second fast). Every function in
// the library uses this convention.

#include <cstddef>
#include <string>
#include <utility>

#include "choi/error.hpp"
#include "choi/matrix.hpp"

namespace choi {

struct BipartiteShape {
  std::size_t m = 1;  // first (output) factor
  std::size_t n = 1;  // second (input) factor

  constexpr BipartiteShape() = default;
  BipartiteShape(std::size_t first, std::size_t second) : m(first), n(second) {
    require(m > 0 && n > 0, ErrorKind::InvalidArgument,
            "bipartite dimensions must be positive");
  }

  std::size_t dim() const noexcept { return m * n; }
  std::size_t flat(std::size_t i, std::size_t j) const noexcept { return i * n + j; }

  friend bool operator==(const BipartiteShape&, const BipartiteShape&) = default;
};

inline std::string to_string(const BipartiteShape& s) {
  return "(" + std::to_string(s.m) + "," + std::to_string(s.n) + ")";
}

/// Column vector in C^m (x) C^n.
class BipartiteVector {
 public:
  BipartiteVector(BipartiteShape shape, Matrix data)
      : shape_(shape), data_(std::move(data)) {
    require(data_.cols() == 1 && data_.rows() == shape_.dim(), ErrorKind::DimensionMismatch,
            "bipartite vector must be a column of length m*n for shape " + to_string(shape_));
  }

  const BipartiteShape& shape() const noexcept { return shape_; }
  const Matrix& data() const noexcept { return data_; }
  Complex operator()(std::size_t i, std::size_t j) const { return data_[shape_.flat(i, j)]; }

 private:
  BipartiteShape shape_;
  Matrix data_;
};

/// Square operator on C^m (x) C^n; entry (i,j; k,l) is mat(i*n+j, k*n+l).
class BipartiteOperator {
 public:
  BipartiteOperator(BipartiteShape shape, Matrix mat) : shape_(shape), mat_(std::move(mat)) {
    require(mat_.rows() == shape_.dim() && mat_.cols() == shape_.dim(),
            ErrorKind::DimensionMismatch,
            "bipartite operator must be (m*n)x(m*n) for shape " + to_string(shape_));
  }

  const BipartiteShape& shape() const noexcept { return shape_; }
  const Matrix& mat() const noexcept { return mat_; }

  Complex operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return mat_(shape_.flat(i, j), shape_.flat(k, l));
  }

 private:
  BipartiteShape shape_;
  Matrix mat_;
};

/// (a (x) b)[(i*p + s), (k*q + t)] = a[i,k] * b[s,t] for b of size p x q.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t p = b.rows(), q = b.cols();
  Matrix out(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t s = 0; s < p; ++s)
        for (std::size_t t = 0; t < q; ++t) out(i * p + s, k * q + t) = aik * b(s, t);
    }
  return out;
}

/// Vector -> m x n matrix: hat(v)[i,j] = v[i*n + j].
inline Matrix hat(const BipartiteVector& v) {
  const auto& s = v.shape();
  return Matrix(s.m, s.n, {v.data().data().begin(), v.data().data().end()});
}

inline BipartiteVector unhat(const Matrix& mat, BipartiteShape shape) {
  require(mat.rows() == shape.m && mat.cols() == shape.n, ErrorKind::DimensionMismatch,
          "unhat: matrix must be m x n for shape " + to_string(shape));
  return BipartiteVector(shape,
                         Matrix(shape.dim(), 1, {mat.data().begin(), mat.data().end()}));
}

/// Vector -> n x m matrix, the transpose of hat.
inline Matrix check(const BipartiteVector& v) { return transpose(hat(v)); }

/// Unnormalized |beta> = sum_j |j>|j> on C^n (x) C^n.
inline BipartiteVector canonical_bell(std::size_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "canonical_bell: n must be positive");
  Matrix v(n * n, 1);
  for (std::size_t j = 0; j < n; ++j) v[j * n + j] = 1.0;
  return BipartiteVector(BipartiteShape(n, n), std::move(v));
}

/// |v><v|.
inline BipartiteOperator projector(const BipartiteVector& v) {
  return BipartiteOperator(v.shape(), matmul(v.data(), adjoint(v.data())));
}

/// Operator -> m^2 x n^2 superoperator. Row (i,k) -> i*m + k, column
/// (j,l) -> j*n + l, entry s(i,j; k,l). A pure entry permutation.
inline Matrix reshuffle_hat(const BipartiteOperator& s) {
  const std::size_t m = s.shape().m, n = s.shape().n;
  Matrix out(m * m, n * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l) out(i * m + k, j * n + l) = s(i, j, k, l);
  return out;
}

inline BipartiteOperator unreshuffle_hat(const Matrix& super, BipartiteShape shape) {
  const std::size_t m = shape.m, n = shape.n;
  require(super.rows() == m * m && super.cols() == n * n, ErrorKind::DimensionMismatch,
          "superoperator must be m^2 x n^2 for shape " + to_string(shape));
  Matrix mat(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l)
          mat(i * n + j, k * n + l) = super(i * m + k, j * n + l);
  return BipartiteOperator(shape, std::move(mat));
}

/// n^2 x m^2 superoperator of the map from the first factor into the second.
inline Matrix reshuffle_check(const BipartiteOperator& s) { return transpose(reshuffle_hat(s)); }

/// Trace over the first factor; n x n result.
inline Matrix partial_trace_1(const BipartiteOperator& s) {
  const std::size_t m = s.shape().m, n = s.shape().n;
  Matrix out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t i = 0; i < m; ++i) out(j, l) += s(i, j, i, l);
  return out;
}

/// Trace over the second factor; m x m result.
inline Matrix partial_trace_2(const BipartiteOperator& s) {
  const std::size_t m = s.shape().m, n = s.shape().n;
  Matrix out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < n; ++j) out(i, k) += s(i, j, k, j);
  return out;
}

/// Transpose on the first factor: (i,j; k,l) -> (k,j; i,l).
inline BipartiteOperator partial_transpose_1(const BipartiteOperator& s) {
  const std::size_t m = s.shape().m, n = s.shape().n;
  Matrix out(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l) out(k * n + j, i * n + l) = s(i, j, k, l);
  return BipartiteOperator(s.shape(), std::move(out));
}

/// Transpose on the second factor: (i,j; k,l) -> (i,l; k,j).
inline BipartiteOperator partial_transpose_2(const BipartiteOperator& s) {
  const std::size_t m = s.shape().m, n = s.shape().n;
  Matrix out(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l) out(i * n + l, k * n + j) = s(i, j, k, l);
  return BipartiteOperator(s.shape(), std::move(out));
}

}  // namespace choi

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

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "choi/error.hpp"
#include "choi/tolerance.hpp"

namespace choi {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Dense complex matrix, row-major. Column vectors are n x 1 matrices.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    require(data_.size() == rows_ * cols_, ErrorKind::DimensionMismatch,
            "data length " + std::to_string(data_.size()) + " != " +
                std::to_string(rows_) + "x" + std::to_string(cols_));
    for (const Complex& z : data_) {
      require(std::isfinite(z.real()) && std::isfinite(z.imag()),
              ErrorKind::NonFinite, "matrix entries must be finite");
    }
  }

  /// Literal construction, e.g. Matrix{{0, 1}, {1, 0}}.
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      require(row.size() == cols_, ErrorKind::DimensionMismatch,
              "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix column(std::span<const Complex> values) {
    return Matrix(values.size(), 1, {values.begin(), values.end()});
  }

  static Matrix column(std::initializer_list<Complex> values) {
    return Matrix(values.size(), 1, std::vector<Complex>(values));
  }

  static Matrix diagonal(std::span<const Complex> values) {
    Matrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  static Matrix diagonal(std::initializer_list<Complex> values) {
    return diagonal(std::span<const Complex>(values.begin(), values.size()));
  }

  /// Matrix unit E_{ij} of the given dimensions.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i,
                     std::size_t j) {
    Matrix m(rows, cols);
    m(i, j) = 1.0;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Complex& operator[](std::size_t k) { return data_[k]; }
  const Complex& operator[](std::size_t k) const { return data_[k]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  Matrix col(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void set_col(std::size_t j, const Matrix& c) {
    require(c.rows_ == rows_ && c.cols_ == 1, ErrorKind::DimensionMismatch,
            "set_col: column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  /// Sub-block [r0, r0+nr) x [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorKind::DimensionMismatch,
            "block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  /// Leading columns [0, k).
  Matrix left_cols(std::size_t k) const { return block(0, 0, rows_, k); }

  Matrix& operator+=(const Matrix& o) {
    check_same(o, "+=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o, "-=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (Complex& z : data_) z *= s;
    return *this;
  }
  Matrix& operator/=(Complex s) {
    for (Complex& z : data_) z /= s;
    return *this;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Matrix& o, const char* op) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch,
            std::string(op) + ": " + std::to_string(rows_) + "x" +
                std::to_string(cols_) + " vs " + std::to_string(o.rows_) + "x" +
                std::to_string(o.cols_));
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

inline Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
inline Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
inline Matrix operator-(Matrix a) { return a *= -1.0; }
inline Matrix operator*(Complex s, Matrix a) { return a *= s; }
inline Matrix operator*(Matrix a, Complex s) { return a *= s; }
inline Matrix operator/(Matrix a, Complex s) { return a /= s; }

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), ErrorKind::DimensionMismatch,
          "matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
              " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

inline Matrix conjugate(const Matrix& a) {
  Matrix c = a;
  for (Complex& z : c.data()) z = std::conj(z);
  return c;
}

inline Matrix adjoint(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

inline Complex trace(const Matrix& a) {
  require(a.is_square(), ErrorKind::DimensionMismatch, "trace of non-square matrix");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// Tr(a^dagger b): conjugate-linear in a, linear in b.
inline Complex frobenius_inner(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch,
          "frobenius_inner: shapes differ");
  Complex s{};
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

inline double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (const Complex& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

inline double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const Complex& z : a.data()) m = std::max(m, std::abs(z));
  return m;
}

/// Entrywise (Hadamard / Schur) product.
inline Matrix hadamard(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch,
          "hadamard: shapes differ");
  Matrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] * b[k];
  return c;
}

/// (a + a^dagger) / 2.
inline Matrix hermitian_part(const Matrix& a) {
  require(a.is_square(), ErrorKind::DimensionMismatch, "hermitian_part of non-square");
  return 0.5 * (a + adjoint(a));
}

/// ||a - b||_F <= max(abs, rel * max(||a||_F, ||b||_F)).
inline bool approx_equal(const Matrix& a, const Matrix& b, const Tolerance& tol = {}) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const double scale = std::max(frobenius_norm(a), frobenius_norm(b));
  return frobenius_norm(a - b) <= tol.threshold(scale);
}

inline bool is_hermitian(const Matrix& a, const Tolerance& tol = {}) {
  if (!a.is_square()) return false;
  return frobenius_norm(a - adjoint(a)) <= tol.threshold(frobenius_norm(a));
}

/// Conjugate-transpose inner product of two column vectors, u^dagger v.
inline Complex dot(const Matrix& u, const Matrix& v) {
  require(u.cols() == 1 && v.cols() == 1 && u.rows() == v.rows(),
          ErrorKind::DimensionMismatch, "dot: column vectors of equal length required");
  return frobenius_inner(u, v);
}

}  // namespace choi

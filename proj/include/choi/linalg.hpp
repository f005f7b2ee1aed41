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

// Dense factorizations for desk-scale complex matrices (dimension up to ~64).
// Every routine is O(d^3) per sweep with a fixed iteration cap.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "choi/error.hpp"
#include "choi/matrix.hpp"
#include "choi/tolerance.hpp"

namespace choi {

inline constexpr int kMaxSweeps = 500;

struct HermitianEigen {
  std::vector<double> values;  // descending
  Matrix vectors;              // unitary, column k pairs with values[k]
};

struct Svd {
  Matrix u;                    // m x r, orthonormal columns
  std::vector<double> values;  // r positive values, descending
  Matrix w;                    // n x r, orthonormal columns; a = u diag(s) w^dagger
  std::size_t rank() const noexcept { return values.size(); }
};

struct QrResult {
  Matrix q;  // m x n, q^dagger q = Id
  Matrix r;  // n x n upper triangular, real non-negative diagonal
};

struct SchurResult {
  Matrix u;  // unitary
  Matrix t;  // upper triangular, a = u t u^dagger
};

struct PolarResult {
  Matrix u;  // m x n isometry
  Matrix j;  // n x n positive, sqrt(a^dagger a)
  Matrix k;  // m x m positive, sqrt(a a^dagger)
};

namespace detail {

// Real rotation (c, s) diagonalizing [[alpha, g], [g, beta]] with g > 0.
inline void jacobi_angle(double alpha, double beta, double g, double& c, double& s) {
  const double theta = (beta - alpha) / (2.0 * g);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  c = 1.0 / std::sqrt(t * t + 1.0);
  s = t * c;
}

// 2x2 unitary acting on coordinates (p, q).
struct Rotation {
  Complex pp, pq, qp, qq;
};

// G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] where phi = arg(offdiag).
inline Rotation make_rotation(double c, double s, Complex offdiag) {
  const double mag = std::abs(offdiag);
  const Complex phase = mag > 0.0 ? std::conj(offdiag) / mag : Complex{1.0};
  return {c, s, -s * phase, c * phase};
}

inline void rotate_cols(Matrix& a, std::size_t p, std::size_t q, const Rotation& g) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const Complex ap = a(r, p);
    const Complex aq = a(r, q);
    a(r, p) = ap * g.pp + aq * g.qp;
    a(r, q) = ap * g.pq + aq * g.qq;
  }
}

// a <- g^dagger a on rows (p, q).
inline void rotate_rows_adjoint(Matrix& a, std::size_t p, std::size_t q, const Rotation& g) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const Complex ap = a(p, c);
    const Complex aq = a(q, c);
    a(p, c) = std::conj(g.pp) * ap + std::conj(g.qp) * aq;
    a(q, c) = std::conj(g.pq) * ap + std::conj(g.qq) * aq;
  }
}

// Multiply column j by the phase that makes its first significant entry real
// positive. Returns the phase applied.
inline Complex fix_column_phase(Matrix& a, std::size_t j) {
  double biggest = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) biggest = std::max(biggest, std::abs(a(i, j)));
  if (biggest == 0.0) return 1.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double mag = std::abs(a(i, j));
    if (mag > 1e-8 * biggest) {
      const Complex phase = std::conj(a(i, j)) / mag;
      for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) *= phase;
      a(i, j) = mag;
      return phase;
    }
  }
  return 1.0;
}

inline void permute_cols(Matrix& a, const std::vector<std::size_t>& order) {
  Matrix out(a.rows(), order.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, k) = a(i, order[k]);
  a = std::move(out);
}

struct FullSvd {
  Matrix u;                    // m x n; columns with zero singular value completed
  std::vector<double> values;  // n values, descending (m >= n)
  Matrix w;                    // n x n unitary
};

}  // namespace detail

/// Orthonormal basis of the orthogonal complement of the column span of q
/// (q must have orthonormal columns). Greedy Gram-Schmidt over canonical
/// basis vectors.
inline Matrix orthonormal_complement(const Matrix& q) {
  const std::size_t d = q.rows();
  const std::size_t k = q.cols();
  require(k <= d, ErrorKind::DimensionMismatch, "orthonormal_complement: too many columns");
  std::vector<Matrix> basis;
  basis.reserve(d);
  for (std::size_t j = 0; j < k; ++j) basis.push_back(q.col(j));
  auto project_out = [&](Matrix v) {
    for (int pass = 0; pass < 2; ++pass)
      for (const Matrix& b : basis) v -= dot(b, v) * b;
    return v;
  };
  Matrix out(d, d - k);
  std::vector<bool> used(d, false);
  for (std::size_t col = 0; col < d - k; ++col) {
    double best_norm = -1.0;
    std::size_t best = 0;
    Matrix best_vec;
    for (std::size_t i = 0; i < d; ++i) {
      if (used[i]) continue;
      Matrix v = project_out(Matrix::unit(d, 1, i, 0));
      const double nv = frobenius_norm(v);
      if (nv > best_norm + 1e-12) {
        best_norm = nv;
        best = i;
        best_vec = std::move(v);
      }
    }
    used[best] = true;
    best_vec /= best_norm;
    out.set_col(col, best_vec);
    basis.push_back(std::move(best_vec));
  }
  return out;
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
inline HermitianEigen hermitian_eig(const Matrix& a, const Tolerance& tol = {}) {
  require(a.is_square(), ErrorKind::DimensionMismatch, "hermitian_eig: non-square input");
  require(is_hermitian(a, tol), ErrorKind::NotHermitian,
          "hermitian_eig: ||a - a^dagger||_F exceeds tolerance");
  const std::size_t n = a.rows();
  Matrix h = hermitian_part(a);
  Matrix v = Matrix::identity(n);
  const double norm = frobenius_norm(h);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (p != q) s += std::norm(h(p, q));
    return std::sqrt(s);
  };

  int sweep = 0;
  while (norm > 0.0 && off_norm() > 1e-15 * norm) {
    if (++sweep > kMaxSweeps)
      fail(ErrorKind::ConvergenceFailure, "hermitian_eig: sweep cap exceeded");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = h(p, q);
        const double g = std::abs(apq);
        if (g <= 1e-300) continue;
        double c, s;
        detail::jacobi_angle(h(p, p).real(), h(q, q).real(), g, c, s);
        const detail::Rotation rot = detail::make_rotation(c, s, apq);
        detail::rotate_cols(h, p, q, rot);
        detail::rotate_rows_adjoint(h, p, q, rot);
        detail::rotate_cols(v, p, q, rot);
        h(p, q) = 0.0;
        h(q, p) = 0.0;
        h(p, p) = h(p, p).real();
        h(q, q) = h(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return h(x, x).real() > h(y, y).real();
  });
  HermitianEigen out;
  out.values.reserve(n);
  for (std::size_t k : order) out.values.push_back(h(k, k).real());
  detail::permute_cols(v, order);
  for (std::size_t j = 0; j < n; ++j) detail::fix_column_phase(v, j);
  out.vectors = std::move(v);
  return out;
}

namespace detail {

// One-sided (Hestenes) Jacobi SVD for m >= n, keeping all n singular values.
inline FullSvd jacobi_svd_tall(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix b = a;
  Matrix w = Matrix::identity(n);
  auto col_inner = [&](std::size_t p, std::size_t q) {
    Complex s{};
    for (std::size_t i = 0; i < m; ++i) s += std::conj(b(i, p)) * b(i, q);
    return s;
  };
  bool rotated = true;
  int sweep = 0;
  while (rotated) {
    if (++sweep > kMaxSweeps) fail(ErrorKind::ConvergenceFailure, "svd: sweep cap exceeded");
    rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = col_inner(p, p).real();
        const double beta = col_inner(q, q).real();
        const Complex gamma = col_inner(p, q);
        const double g = std::abs(gamma);
        if (g <= 1e-15 * std::sqrt(alpha * beta) || g <= 1e-300) continue;
        rotated = true;
        double c, s;
        jacobi_angle(alpha, beta, g, c, s);
        const Rotation rot = make_rotation(c, s, gamma);
        rotate_cols(b, p, q, rot);
        rotate_cols(w, p, q, rot);
      }
    }
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(col_inner(j, j).real());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });
  permute_cols(b, order);
  permute_cols(w, order);
  FullSvd out;
  for (std::size_t k : order) out.values.push_back(sigma[k]);

  // Left vectors for clearly nonzero singular values; complete the rest.
  const double smax = out.values.empty() ? 0.0 : out.values.front();
  std::size_t good = 0;
  while (good < n && out.values[good] > 1e-13 * smax && out.values[good] > 1e-300) ++good;
  Matrix u(m, n);
  for (std::size_t j = 0; j < good; ++j)
    for (std::size_t i = 0; i < m; ++i) u(i, j) = b(i, j) / out.values[j];
  if (good < n) {
    Matrix comp = orthonormal_complement(u.left_cols(good));
    for (std::size_t j = good; j < n; ++j) u.set_col(j, comp.col(j - good));
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Complex phase = fix_column_phase(u, j);
    for (std::size_t i = 0; i < n; ++i) w(i, j) *= phase;
  }
  out.u = std::move(u);
  out.w = std::move(w);
  return out;
}

}  // namespace detail

/// Truncated SVD: a = u diag(s) w^dagger keeping singular values above
/// max(abs, rel * s_max). A zero matrix has rank 0 and empty factors.
inline Svd svd(const Matrix& a, const Tolerance& tol = {}) {
  require(!a.empty(), ErrorKind::DimensionMismatch, "svd: empty matrix");
  detail::FullSvd full;
  if (a.rows() >= a.cols()) {
    full = detail::jacobi_svd_tall(a);
  } else {
    detail::FullSvd t = detail::jacobi_svd_tall(adjoint(a));
    full.u = std::move(t.w);
    full.w = std::move(t.u);
    full.values = std::move(t.values);
    for (std::size_t j = 0; j < full.values.size(); ++j) {
      const Complex phase = detail::fix_column_phase(full.u, j);
      for (std::size_t i = 0; i < full.w.rows(); ++i) full.w(i, j) *= phase;
    }
  }
  const double smax = full.values.empty() ? 0.0 : full.values.front();
  const double cut = tol.threshold(smax);
  std::size_t r = 0;
  while (r < full.values.size() && full.values[r] > cut) ++r;
  Svd out;
  out.values.assign(full.values.begin(), full.values.begin() + static_cast<long>(r));
  out.u = full.u.left_cols(r);
  out.w = full.w.left_cols(r);
  return out;
}

/// Number of singular values above max(abs, rel * s_max).
inline std::size_t numerical_rank(const Matrix& a, const Tolerance& tol = {}) {
  return svd(a, tol).rank();
}

/// Householder QR for m >= n with the phase convention diag(R) >= 0.
inline QrResult qr(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  require(m >= n, ErrorKind::DimensionMismatch, "qr: requires rows >= cols");
  Matrix r = a;
  std::vector<Matrix> reflectors;
  reflectors.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix x = r.block(k, k, m - k, 1);
    const double normx = frobenius_norm(x);
    if (normx == 0.0) {
      reflectors.emplace_back();
      continue;
    }
    const double mag0 = std::abs(x[0]);
    const Complex phase = mag0 > 0.0 ? x[0] / mag0 : Complex{1.0};
    const Complex alpha = -phase * normx;
    Matrix v = x;
    v[0] -= alpha;
    const double vv = frobenius_norm(v);
    if (vv == 0.0) {
      reflectors.emplace_back();
      continue;
    }
    v /= vv;
    // r[k:, k:] -= 2 v (v^dagger r[k:, k:])
    for (std::size_t j = k; j < n; ++j) {
      Complex s{};
      for (std::size_t i = k; i < m; ++i) s += std::conj(v[i - k]) * r(i, j);
      for (std::size_t i = k; i < m; ++i) r(i, j) -= 2.0 * v[i - k] * s;
    }
    r(k, k) = alpha;
    for (std::size_t i = k + 1; i < m; ++i) r(i, k) = 0.0;
    reflectors.push_back(std::move(v));
  }
  Matrix q(m, n);
  for (std::size_t j = 0; j < n; ++j) q(j, j) = 1.0;
  for (std::size_t kk = n; kk-- > 0;) {
    const Matrix& v = reflectors[kk];
    if (v.empty()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t i = kk; i < m; ++i) s += std::conj(v[i - kk]) * q(i, j);
      for (std::size_t i = kk; i < m; ++i) q(i, j) -= 2.0 * v[i - kk] * s;
    }
  }
  Matrix rr = r.block(0, 0, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = std::abs(rr(i, i));
    if (mag == 0.0) continue;
    const Complex d = rr(i, i) / mag;
    for (std::size_t row = 0; row < m; ++row) q(row, i) *= d;
    for (std::size_t col = 0; col < n; ++col) rr(i, col) *= std::conj(d);
    rr(i, i) = mag;
  }
  return {std::move(q), std::move(rr)};
}

namespace detail {

// One eigenvalue of a square matrix: shifted QR iterations until the last row
// decouples.
inline Complex one_eigenvalue(const Matrix& b) {
  const std::size_t n = b.rows();
  if (n == 1) return b(0, 0);
  Matrix a = b;
  const double scale = std::max(frobenius_norm(b), 1e-300);
  const std::size_t last = n - 1;
  for (int iter = 0; iter < kMaxSweeps; ++iter) {
    double off = 0.0;
    for (std::size_t j = 0; j < last; ++j) off += std::abs(a(last, j));
    if (off <= 1e-15 * scale) return a(last, last);
    // Wilkinson shift from the trailing 2x2 block.
    const Complex p = a(last - 1, last - 1), q = a(last - 1, last);
    const Complex r = a(last, last - 1), s = a(last, last);
    const Complex half_tr = 0.5 * (p + s);
    const Complex disc = std::sqrt(0.25 * (p - s) * (p - s) + q * r);
    const Complex mu1 = half_tr + disc, mu2 = half_tr - disc;
    Complex mu = std::abs(mu1 - s) < std::abs(mu2 - s) ? mu1 : mu2;
    if (iter % 11 == 10) mu = s + Complex{0.75, 0.5} * off;  // exceptional shift
    for (std::size_t i = 0; i < n; ++i) a(i, i) -= mu;
    QrResult f = qr(a);
    a = matmul(f.r, f.q);
    for (std::size_t i = 0; i < n; ++i) a(i, i) += mu;
  }
  fail(ErrorKind::ConvergenceFailure, "schur: eigenvalue iteration cap exceeded");
}

// Unit vector spanning (approximately) the null space of a square matrix:
// the right singular vector of the smallest singular value, first index on ties.
inline Matrix null_vector(const Matrix& a) {
  FullSvd f = jacobi_svd_tall(a);
  const double smin = f.values.back();
  std::size_t pick = f.values.size() - 1;
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    if (f.values[j] <= smin) {
      pick = j;
      break;
    }
  }
  Matrix v = f.w.col(pick);
  fix_column_phase(v, 0);
  return v;
}

}  // namespace detail

/// Complex Schur form a = u t u^dagger by recursive deflation: find one
/// eigenpair of the trailing block, extend the eigenvector to an orthonormal
/// basis, and recurse.
inline SchurResult schur(const Matrix& a, const Tolerance& tol = {}) {
  require(a.is_square(), ErrorKind::DimensionMismatch, "schur: non-square input");
  const std::size_t n = a.rows();
  Matrix t = a;
  Matrix u = Matrix::identity(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t d = n - k;
    Matrix b = t.block(k, k, d, d);
    const Complex lambda = detail::one_eigenvalue(b);
    Matrix shifted = b;
    for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= lambda;
    Matrix v = detail::null_vector(shifted);
    Matrix comp = orthonormal_complement(v);
    Matrix basis(d, d);
    basis.set_col(0, v);
    for (std::size_t j = 1; j < d; ++j) basis.set_col(j, comp.col(j - 1));

    // t[:, k:] <- t[:, k:] basis ; t[k:, :] <- basis^dagger t[k:, :]
    Matrix right = matmul(t.block(0, k, n, d), basis);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j) t(i, k + j) = right(i, j);
    Matrix lower = matmul(adjoint(basis), t.block(k, 0, d, n));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j) t(k + i, j) = lower(i, j);
    Matrix ucols = matmul(u.block(0, k, n, d), basis);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j) u(i, k + j) = ucols(i, j);
    for (std::size_t i = k + 1; i < n; ++i) t(i, k) = 0.0;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) t(i, j) = 0.0;
  const double residual = frobenius_norm(a - matmul(matmul(u, t), adjoint(u)));
  require(residual <= std::max(tol.threshold(frobenius_norm(a)), 1e-10 * frobenius_norm(a)),
          ErrorKind::ConvergenceFailure, "schur: reconstruction residual too large");
  return {std::move(u), std::move(t)};
}

/// Polar decomposition a = u j = k u for m >= n.
inline PolarResult polar(const Matrix& a, const Tolerance& tol = {}) {
  (void)tol;
  require(a.rows() >= a.cols(), ErrorKind::DimensionMismatch, "polar: requires rows >= cols");
  detail::FullSvd f = detail::jacobi_svd_tall(a);
  const std::size_t n = a.cols();
  Matrix us = f.u;  // m x n
  Matrix scaled_w = f.w;
  Matrix scaled_u = us;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) scaled_w(i, j) *= f.values[j];
    for (std::size_t i = 0; i < us.rows(); ++i) scaled_u(i, j) *= f.values[j];
  }
  PolarResult out;
  out.u = matmul(us, adjoint(f.w));
  out.j = matmul(scaled_w, adjoint(f.w));
  out.k = matmul(scaled_u, adjoint(us));
  return out;
}

/// Moore-Penrose pseudo-inverse with rank cut max(abs, rel * s_max).
inline Matrix pinv(const Matrix& a, const Tolerance& tol = {}) {
  Svd s = svd(a, tol);
  Matrix wd = s.w;
  for (std::size_t j = 0; j < s.rank(); ++j)
    for (std::size_t i = 0; i < wd.rows(); ++i) wd(i, j) /= s.values[j];
  if (s.rank() == 0) return Matrix(a.cols(), a.rows());
  return matmul(wd, adjoint(s.u));
}

/// Inverse of a square matrix; Singular when any singular value falls below
/// max(abs, rel * s_max).
inline Matrix inverse(const Matrix& a, const Tolerance& tol = {}) {
  require(a.is_square(), ErrorKind::DimensionMismatch, "inverse: non-square input");
  Svd s = svd(a, tol);
  require(s.rank() == a.rows(), ErrorKind::Singular, "inverse: matrix is singular");
  return pinv(a, tol);
}

/// Principal square root of a positive semidefinite Hermitian matrix;
/// eigenvalues in the negative tolerance band are clipped to zero.
inline Matrix psd_sqrt(const Matrix& h, const Tolerance& tol = {}) {
  HermitianEigen e = hermitian_eig(h, tol);
  const double cut = tol.threshold(frobenius_norm(h));
  require(e.values.empty() || e.values.back() >= -cut, ErrorKind::InvalidArgument,
          "psd_sqrt: matrix is not positive semidefinite");
  Matrix scaled = e.vectors;
  for (std::size_t j = 0; j < e.values.size(); ++j) {
    const double root = std::sqrt(std::max(e.values[j], 0.0));
    for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, j) *= root;
  }
  return matmul(scaled, adjoint(e.vectors));
}

}  // namespace choi

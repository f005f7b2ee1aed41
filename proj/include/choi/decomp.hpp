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

// Decompositions of bipartite vectors (Schmidt, triangular) and of channels
// (dilation, unitary freedom between Kraus sets).

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "choi/bipartite.hpp"
#include "choi/channel.hpp"
#include "choi/error.hpp"
#include "choi/linalg.hpp"
#include "choi/matrix.hpp"
#include "choi/tolerance.hpp"

namespace choi {

/// v = sum_i lambda_i |psi_i> (x) |phi_i>. right_basis holds |phi_i> directly
/// (the conjugated right singular vectors of hat(v)).
struct SchmidtForm {
  std::vector<double> coefficients;
  Matrix left_basis;   // m x r
  Matrix right_basis;  // n x r
  std::size_t rank() const noexcept { return coefficients.size(); }
};

/// One-sided: v = sum_{i<=j} mu_ij |psi_i> (x) |j>, basis_right absent.
/// Two-sided: v = sum_{i<=j} mu_ij |psi_i> (x) |psi*_j>, basis_right = conj(basis_left).
struct TriangularForm {
  Matrix basis_left;
  std::optional<Matrix> basis_right;
  Matrix coefficients;
};

/// Stacked Kraus blocks with the ancilla as the slow index.
struct Dilation {
  std::size_t ancilla_dim = 0;
  Matrix isometry_like;  // (r*m) x n
  Matrix gram;           // n x n
};

inline SchmidtForm schmidt(const BipartiteVector& v, const Tolerance& tol = {}) {
  const Svd s = svd(hat(v), tol);
  SchmidtForm out;
  out.coefficients = s.values;
  out.left_basis = s.u;
  out.right_basis = conjugate(s.w);
  return out;
}

/// sum_i lambda_i |psi_i> (x) |phi_i>.
inline BipartiteVector reconstruct(const SchmidtForm& f, BipartiteShape shape) {
  Matrix v(shape.dim(), 1);
  for (std::size_t r = 0; r < f.rank(); ++r)
    v += f.coefficients[r] * kron(f.left_basis.col(r), f.right_basis.col(r));
  return BipartiteVector(shape, std::move(v));
}

/// Polar decomposition of a pure channel's hat factor, cross-checked against
/// the partial traces of the corresponding pure state:
/// J = (sqrt Tr_1(vv^dagger))^t and K = sqrt Tr_2(vv^dagger).
inline PolarResult polar_of_pure_channel(const Matrix& vhat, const Tolerance& tol = {}) {
  require(vhat.rows() >= vhat.cols(), ErrorKind::DimensionMismatch,
          "polar_of_pure_channel requires m >= n");
  PolarResult p = polar(vhat, tol);
  const BipartiteShape shape(vhat.rows(), vhat.cols());
  const BipartiteOperator state = projector(unhat(vhat, shape));
  const Matrix j_bridge = transpose(psd_sqrt(hermitian_part(partial_trace_1(state)), tol));
  const Matrix k_bridge = psd_sqrt(hermitian_part(partial_trace_2(state)), tol);
  // psd_sqrt halves relative accuracy near zero eigenvalues.
  const Tolerance loose(std::sqrt(tol.abs), std::sqrt(tol.rel));
  require(approx_equal(p.j, j_bridge, loose) && approx_equal(p.k, k_bridge, loose),
          ErrorKind::NumericalFailure, "polar factors disagree with partial-trace square roots");
  return p;
}

/// QR of hat(v); the second factor stays in the canonical basis.
inline TriangularForm one_sided_triangular(const BipartiteVector& v, const Tolerance& = {}) {
  require(v.shape().m >= v.shape().n, ErrorKind::DimensionMismatch,
          "one_sided_triangular requires m >= n");
  QrResult f = qr(hat(v));
  return TriangularForm{std::move(f.q), std::nullopt, std::move(f.r)};
}

/// Schur form of hat(v) = U T U^dagger; diag(T) holds the eigenvalues of hat(v).
inline TriangularForm two_sided_triangular(const BipartiteVector& v, const Tolerance& tol = {}) {
  require(v.shape().m == v.shape().n, ErrorKind::DimensionMismatch,
          "two_sided_triangular requires m == n");
  SchurResult f = schur(hat(v), tol);
  Matrix right = conjugate(f.u);
  return TriangularForm{std::move(f.u), std::move(right), std::move(f.t)};
}

/// sum_{i<=j} mu_ij |psi_i> (x) |chi_j>, chi = basis_right or the canonical basis.
inline BipartiteVector reconstruct(const TriangularForm& f, BipartiteShape shape) {
  Matrix v(shape.dim(), 1);
  const Matrix& mu = f.coefficients;
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = i; j < mu.cols(); ++j) {
      if (mu(i, j) == Complex{}) continue;
      const Matrix chi = f.basis_right ? f.basis_right->col(j) : Matrix::unit(shape.n, 1, j, 0);
      v += mu(i, j) * kron(f.basis_left.col(i), chi);
    }
  return BipartiteVector(shape, std::move(v));
}

inline Dilation dilate(const KrausSet& k) {
  const std::size_t m = k.shape().m, n = k.shape().n, r = k.size();
  Dilation d;
  d.ancilla_dim = r;
  d.isometry_like = Matrix(r * m, n);
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) d.isometry_like(x * m + i, j) = k[x](i, j);
  d.gram = matmul(adjoint(d.isometry_like), d.isometry_like);
  return d;
}

/// Reads the Kraus blocks back out of a dilation.
inline KrausSet kraus_blocks(const Dilation& d) {
  const std::size_t r = d.ancilla_dim;
  const std::size_t m = d.isometry_like.rows() / r, n = d.isometry_like.cols();
  std::vector<Matrix> ops;
  for (std::size_t x = 0; x < r; ++x) ops.push_back(d.isometry_like.block(x * m, 0, m, n));
  return KrausSet(BipartiteShape(m, n), std::move(ops));
}

/// Tr_ancilla(V rho V^dagger).
inline Matrix apply_dilation(const Dilation& d, const Matrix& rho) {
  const std::size_t r = d.ancilla_dim, n = d.isometry_like.cols();
  require(rho.rows() == n && rho.cols() == n, ErrorKind::DimensionMismatch,
          "apply_dilation: input must be " + std::to_string(n) + "x" + std::to_string(n));
  const Matrix big = matmul(matmul(d.isometry_like, rho), adjoint(d.isometry_like));
  return partial_trace_1(BipartiteOperator(BipartiteShape(r, big.rows() / r), big));
}

struct KrausIsometry {
  Matrix u;
  // false: A_x = sum_y u_xy B_y (u is |a| x |b|).
  // true:  B_y = sum_x u_yx A_x (u is |b| x |a|), used when |a| < |b|.
  bool reversed = false;
  double residual = 0.0;
};

namespace detail {

inline Matrix row_stack(const KrausSet& k) {
  const std::size_t d = k.shape().dim();
  Matrix s(k.size(), d);
  for (std::size_t x = 0; x < k.size(); ++x)
    for (std::size_t e = 0; e < d; ++e) s(x, e) = k[x][e];
  return s;
}

/// Isometry u with big = u * small, |big| >= |small|. The least-squares
/// solution big * pinv(small) is completed on the null directions of small
/// (linearly dependent members) so that u^dagger u = Id.
inline Matrix solve_isometry(const Matrix& big, const Matrix& small, const Matrix& minimal,
                             const Tolerance& tol) {
  const Matrix pinv_min = pinv(minimal, tol);
  const Matrix ua = matmul(big, pinv_min);
  const Matrix ub = matmul(small, pinv_min);
  Matrix u = matmul(big, pinv(small, tol));
  const std::size_t r = minimal.rows();
  const std::size_t extra = small.rows() - r;
  if (extra > 0) {
    const Matrix nb = orthonormal_complement(ub);
    const Matrix na = orthonormal_complement(ua).left_cols(extra);
    u += matmul(na, adjoint(nb));
  }
  return u;
}

}  // namespace detail

/// Unitary freedom of the operator-sum form: recovers an isometry relating
/// two Kraus sets of the same map.
inline KrausIsometry find_kraus_isometry(const KrausSet& a, const KrausSet& b,
                                         const Tolerance& tol = {}) {
  require(a.shape() == b.shape(), ErrorKind::DimensionMismatch,
          "find_kraus_isometry: Kraus sets have different shapes");
  const Channel ca = channel_from_kraus(a);
  const Channel cb = channel_from_kraus(b);
  require(channel_equal(ca, cb, tol), ErrorKind::DifferentChannels,
          "find_kraus_isometry: Kraus sets define different maps");

  KrausIsometry out;
  out.reversed = a.size() < b.size();
  const Matrix sa = detail::row_stack(a), sb = detail::row_stack(b);
  const Matrix& big = out.reversed ? sb : sa;
  const Matrix& small = out.reversed ? sa : sb;
  const Matrix minimal = detail::row_stack(kraus_from_channel(ca, tol));
  // The zero map has a single zero Kraus member in its minimal set.
  const bool zero = frobenius_norm(minimal) == 0.0;
  if (zero) {
    out.u = Matrix(big.rows(), small.rows());
    for (std::size_t i = 0; i < small.rows(); ++i) out.u(i, i) = 1.0;
  } else {
    out.u = detail::solve_isometry(big, small, minimal, tol);
  }

  out.residual = frobenius_norm(big - matmul(out.u, small));
  const double scale = std::max(frobenius_norm(big), 1.0);
  const Matrix gram = matmul(adjoint(out.u), out.u);
  require(out.residual <= tol.threshold(scale) &&
              approx_equal(gram, Matrix::identity(gram.rows()), Tolerance(1e-9, 1e-9)),
          ErrorKind::NumericalFailure, "find_kraus_isometry: recovered relation failed checks");
  return out;
}

}  // namespace choi

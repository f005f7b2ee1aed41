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

// Structures induced on states by the correspondence with maps: the diamond
// product, the group of totally entangled pure states, Schur products of
// channels, the trace pairing, partial-transpose tests and the
// state-as-measurement identity.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "choi/bipartite.hpp"
#include "choi/channel.hpp"
#include "choi/decomp.hpp"
#include "choi/error.hpp"
#include "choi/linalg.hpp"
#include "choi/matrix.hpp"
#include "choi/tolerance.hpp"

namespace choi {

/// Operator on C^n (x) C^n; the domain of the diamond product.
class StateSquare {
 public:
  explicit StateSquare(BipartiteOperator mat) : mat_(std::move(mat)) {
    require(mat_.shape().m == mat_.shape().n, ErrorKind::DimensionMismatch,
            "StateSquare requires a square split, got " + to_string(mat_.shape()));
  }
  StateSquare(std::size_t n, Matrix mat) : StateSquare(BipartiteOperator({n, n}, std::move(mat))) {}

  std::size_t n() const noexcept { return mat_.shape().n; }
  const BipartiteOperator& op() const noexcept { return mat_; }
  const Matrix& mat() const noexcept { return mat_.mat(); }

 private:
  BipartiteOperator mat_;
};

/// (a <> b)_{ij;kl} = sum a_{ii';kk'} b_{i'j;k'l}: the Choi matrix of the
/// composition of the corresponding maps.
inline StateSquare diamond(const StateSquare& a, const StateSquare& b) {
  require(a.n() == b.n(), ErrorKind::DimensionMismatch,
          "diamond: dimensions " + std::to_string(a.n()) + " and " + std::to_string(b.n()));
  const Matrix product = matmul(reshuffle_hat(a.op()), reshuffle_hat(b.op()));
  return StateSquare(unreshuffle_hat(product, a.op().shape()));
}

/// The unit of the diamond product, beta beta^dagger.
inline StateSquare diamond_identity(std::size_t n) { return StateSquare(projector(canonical_bell(n))); }

enum class Entanglement { ProductPure, EntangledPure, TotallyEntangledPure, MaximallyEntangledPure, Mixed };

inline const char* to_string(Entanglement e) {
  switch (e) {
    case Entanglement::ProductPure: return "ProductPure";
    case Entanglement::EntangledPure: return "EntangledPure";
    case Entanglement::TotallyEntangledPure: return "TotallyEntangledPure";
    case Entanglement::MaximallyEntangledPure: return "MaximallyEntangledPure";
    case Entanglement::Mixed: return "Mixed";
  }
  return "?";
}

struct EntanglementClass {
  Entanglement verdict = Entanglement::Mixed;
  std::optional<std::size_t> schmidt_rank;
};

/// Pure-state classification by Schmidt rank. Totally entangled: full
/// Schmidt rank with smallest coefficient above rel * largest. Maximally
/// entangled: additionally the reduced operator on the smaller factor is
/// the identity (Tr_1 when m >= n).
inline EntanglementClass classify_entanglement(const BipartiteVector& v, const Tolerance& tol = {}) {
  const SchmidtForm f = schmidt(v, tol);
  EntanglementClass out;
  out.schmidt_rank = f.rank();
  const std::size_t full = std::min(v.shape().m, v.shape().n);
  if (f.rank() <= 1) {
    out.verdict = Entanglement::ProductPure;
    return out;
  }
  const bool total = f.rank() == full && f.coefficients.back() > tol.rel * f.coefficients.front();
  if (!total) {
    out.verdict = Entanglement::EntangledPure;
    return out;
  }
  const BipartiteOperator state = projector(v);
  const Matrix reduced =
      v.shape().m >= v.shape().n ? partial_trace_1(state) : partial_trace_2(state);
  out.verdict = approx_equal(reduced, Matrix::identity(full), tol)
                    ? Entanglement::MaximallyEntangledPure
                    : Entanglement::TotallyEntangledPure;
  return out;
}

namespace detail {

/// v with rho = v v^dagger when rho is Hermitian PSD of rank one.
inline std::optional<BipartiteVector> pure_factor(const BipartiteOperator& rho, const Tolerance& tol) {
  if (!is_hermitian(rho.mat(), tol)) return std::nullopt;
  const HermitianEigen e = hermitian_eig(rho.mat(), tol);
  const double cut = tol.threshold(frobenius_norm(rho.mat()));
  if (e.values.empty() || e.values.front() <= cut) return std::nullopt;
  for (std::size_t x = 1; x < e.values.size(); ++x)
    if (std::abs(e.values[x]) > cut) return std::nullopt;
  return BipartiteVector(rho.shape(), std::sqrt(e.values.front()) * e.vectors.col(0));
}

}  // namespace detail

/// Density-operator input: rank-one PSD operators are classified through
/// their vector, everything else is Mixed.
inline EntanglementClass classify_entanglement(const BipartiteOperator& rho, const Tolerance& tol = {}) {
  if (auto v = detail::pure_factor(rho, tol)) return classify_entanglement(*v, tol);
  return EntanglementClass{Entanglement::Mixed, std::nullopt};
}

/// A A^dagger with A = unhat(ahat).
inline StateSquare phi_homomorphism(const Matrix& ahat, const Tolerance& tol = {}) {
  require(ahat.is_square(), ErrorKind::DimensionMismatch, "phi_homomorphism: ahat must be square");
  const Svd s = svd(ahat, tol);
  require(s.rank() == ahat.rows() && s.values.back() > tol.threshold(s.values.front()),
          ErrorKind::Singular, "phi_homomorphism: ahat is not invertible");
  return StateSquare(projector(unhat(ahat, BipartiteShape(ahat.rows(), ahat.cols()))));
}

/// For a = A A^dagger with invertible hat(A), returns W W^dagger with
/// hat(W) = hat(A)^{-1}. Defined up to the U(1) gauge of A.
inline StateSquare group_inverse(const StateSquare& a, const Tolerance& tol = {}) {
  const auto v = detail::pure_factor(a.op(), tol);
  require(v.has_value(), ErrorKind::NotTotallyEntangled, "group_inverse: input is not pure");
  const Matrix ahat = hat(*v);
  const Svd s = svd(ahat, tol);
  require(s.rank() == a.n() && s.values.back() > tol.rel * s.values.front(),
          ErrorKind::NotTotallyEntangled, "group_inverse: hat factor is not invertible");
  const Matrix w = inverse(ahat, tol);
  return StateSquare(projector(unhat(w, a.op().shape())));
}

/// Equality of rank-one projectors after trace normalization; quotients out
/// the U(1) and scale gauge of the group law.
inline bool projectors_equal(const Matrix& a, const Matrix& b, const Tolerance& tol = {}) {
  const Complex ta = trace(a), tb = trace(b);
  require(std::abs(ta) > 0.0 && std::abs(tb) > 0.0, ErrorKind::InvalidArgument,
          "projectors_equal: zero trace");
  return approx_equal(a / ta, b / tb, tol);
}

/// Entrywise product of the superoperators.
inline Channel schur_product_channels(const Channel& a, const Channel& b) {
  require(a.shape() == b.shape(), ErrorKind::DimensionMismatch,
          "schur_product_channels: shapes " + to_string(a.shape()) + " and " + to_string(b.shape()));
  return channel_from_superop(hadamard(superop_from_channel(a), superop_from_channel(b)), a.shape());
}

/// The functional s -> Tr(e^dagger s) associated with e.
class DualFunctional {
 public:
  explicit DualFunctional(BipartiteOperator e) : e_(std::move(e)) {}
  Complex operator()(const BipartiteOperator& s) const {
    require(s.shape() == e_.shape(), ErrorKind::DimensionMismatch,
            "dual functional: shapes " + to_string(e_.shape()) + " and " + to_string(s.shape()));
    return frobenius_inner(e_.mat(), s.mat());
  }

 private:
  BipartiteOperator e_;
};

inline DualFunctional dual_functional(BipartiteOperator e) { return DualFunctional(std::move(e)); }

enum class TransposeSide { First, Second };

inline const char* to_string(TransposeSide s) { return s == TransposeSide::First ? "first" : "second"; }

struct PptResult {
  bool is_ppt = false;
  double min_eigenvalue = 0.0;  // of the partial transpose on the reported side
  double min_eigenvalue_first = 0.0;
  double min_eigenvalue_second = 0.0;
  TransposeSide side = TransposeSide::Second;
};

/// Positive-partial-transpose test. Both partial transposes are computed;
/// they are globally transposed to each other and must give the same verdict.
/// NPT implies entangled; PPT is inconclusive in general.
inline PptResult ppt_test(const BipartiteOperator& s, const Tolerance& tol = {}) {
  require(is_hermitian(s.mat(), tol), ErrorKind::NotHermitian, "ppt_test: operator is not Hermitian");
  const double cut = tol.threshold(frobenius_norm(s.mat()));
  PptResult out;
  out.min_eigenvalue_second = hermitian_eig(hermitian_part(partial_transpose_2(s).mat()), tol).values.back();
  out.min_eigenvalue_first = hermitian_eig(hermitian_part(partial_transpose_1(s).mat()), tol).values.back();
  const bool ppt_second = out.min_eigenvalue_second >= -cut;
  const bool ppt_first = out.min_eigenvalue_first >= -cut;
  require(ppt_first == ppt_second, ErrorKind::NumericalFailure,
          "ppt_test: partial transposes disagree");
  out.is_ppt = ppt_second;
  if (out.min_eigenvalue_first < out.min_eigenvalue_second - cut) {
    out.side = TransposeSide::First;
    out.min_eigenvalue = out.min_eigenvalue_first;
  } else {
    out.side = TransposeSide::Second;
    out.min_eigenvalue = out.min_eigenvalue_second;
  }
  return out;
}

/// Unrescaled post-measurement state on the first factor after measuring
/// the second with m_op: Tr_2((Id_m (x) M) s (Id_m (x) M^dagger)).
/// Equals apply(channel of s, (M^dagger M)^t).
inline Matrix state_as_measurement(const BipartiteOperator& s, const Matrix& m_op) {
  const std::size_t m = s.shape().m, n = s.shape().n;
  require(m_op.rows() == n && m_op.cols() == n, ErrorKind::DimensionMismatch,
          "state_as_measurement: measurement operator must be " + std::to_string(n) + "x" +
              std::to_string(n));
  const Matrix left = kron(Matrix::identity(m), m_op);
  const Matrix product = matmul(matmul(left, s.mat()), adjoint(left));
  return partial_trace_2(BipartiteOperator(s.shape(), product));
}

}  // namespace choi

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

// Linear maps M_n -> M_m stored canonically as their Choi matrix on
// C^m (x) C^n, with the superoperator and Kraus forms as derived views.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "choi/bipartite.hpp"
#include "choi/error.hpp"
#include "choi/linalg.hpp"
#include "choi/matrix.hpp"
#include "choi/random.hpp"
#include "choi/tolerance.hpp"

namespace choi {

/// Linear map from M_n to M_m. No positivity is imposed: the transpose map
/// and other non-CP maps are representable and classified by predicates.
class Channel {
 public:
  explicit Channel(BipartiteOperator choi) : choi_(std::move(choi)) {}
  Channel(BipartiteShape shape, Matrix choi) : choi_(shape, std::move(choi)) {}

  const BipartiteShape& shape() const noexcept { return choi_.shape(); }
  std::size_t output_dim() const noexcept { return choi_.shape().m; }
  std::size_t input_dim() const noexcept { return choi_.shape().n; }
  const BipartiteOperator& choi() const noexcept { return choi_; }
  const Matrix& choi_matrix() const noexcept { return choi_.mat(); }

 private:
  BipartiteOperator choi_;
};

/// Operator-sum form rho -> sum_x A_x rho A_x^dagger with m x n members.
class KrausSet {
 public:
  KrausSet(BipartiteShape shape, std::vector<Matrix> ops) : shape_(shape), ops_(std::move(ops)) {
    require(!ops_.empty(), ErrorKind::InvalidArgument, "Kraus set must be non-empty");
    for (const Matrix& a : ops_)
      require(a.rows() == shape_.m && a.cols() == shape_.n, ErrorKind::DimensionMismatch,
              "every Kraus operator must be m x n for shape " + to_string(shape_));
  }

  /// Shape inferred from the first member.
  explicit KrausSet(std::vector<Matrix> ops) {
    if (!ops.empty()) shape_ = BipartiteShape(ops.front().rows(), ops.front().cols());
    *this = KrausSet(shape_, std::move(ops));
  }

  const BipartiteShape& shape() const noexcept { return shape_; }
  const std::vector<Matrix>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  const Matrix& operator[](std::size_t x) const { return ops_[x]; }

 private:
  BipartiteShape shape_;
  std::vector<Matrix> ops_;
};

/// Raised when an operation needs a completely positive map. Carries the
/// eigenvector of the most negative Choi eigenvalue when one exists.
class NotCompletelyPositiveError : public Error {
 public:
  NotCompletelyPositiveError(const std::string& message, std::optional<BipartiteVector> witness,
                             double eigenvalue)
      : Error(ErrorKind::NotCompletelyPositive, message),
        witness_(std::move(witness)),
        eigenvalue_(eigenvalue) {}

  const std::optional<BipartiteVector>& witness() const noexcept { return witness_; }
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  std::optional<BipartiteVector> witness_;
  double eigenvalue_;
};

// ---------------------------------------------------------------------------
// Representations

/// Choi = sum_x A_x A_x^dagger with A_x = unhat(Kraus_x).
inline Channel channel_from_kraus(const KrausSet& k) {
  const BipartiteShape shape = k.shape();
  Matrix choi(shape.dim(), shape.dim());
  for (const Matrix& a : k.ops()) {
    const Matrix v = unhat(a, shape).data();
    choi += matmul(v, adjoint(v));
  }
  return Channel(shape, std::move(choi));
}

inline Channel channel_from_choi(Matrix choi, BipartiteShape shape) {
  return Channel(shape, std::move(choi));
}

inline Matrix superop_from_channel(const Channel& c) { return reshuffle_hat(c.choi()); }

inline Channel channel_from_superop(const Matrix& super, BipartiteShape shape) {
  return Channel(unreshuffle_hat(super, shape));
}

struct CpCheck {
  bool completely_positive = false;
  double min_eigenvalue = 0.0;
  std::optional<BipartiteVector> witness;  // eigenvector of min_eigenvalue when negative
};

/// The map is CP iff its Choi matrix is Hermitian with
/// min eigenvalue >= -max(abs, rel * ||choi||_F).
inline CpCheck is_completely_positive(const Channel& c, const Tolerance& tol = {}) {
  const Matrix& choi = c.choi_matrix();
  const double cut = tol.threshold(frobenius_norm(choi));
  CpCheck out;
  const HermitianEigen e = hermitian_eig(hermitian_part(choi), tol);
  out.min_eigenvalue = e.values.back();
  if (out.min_eigenvalue < -cut)
    out.witness = BipartiteVector(c.shape(), e.vectors.col(e.values.size() - 1));
  out.completely_positive = is_hermitian(choi, tol) && out.min_eigenvalue >= -cut;
  return out;
}

/// Minimal, mutually orthogonal Kraus set from the Choi eigendecomposition:
/// A_x = sqrt(lambda_x) hat(v_x), ordered by descending eigenvalue.
inline KrausSet kraus_from_channel(const Channel& c, const Tolerance& tol = {}) {
  const Matrix& choi = c.choi_matrix();
  if (!is_hermitian(choi, tol))
    throw NotCompletelyPositiveError("Choi matrix is not Hermitian", std::nullopt, 0.0);
  const HermitianEigen e = hermitian_eig(choi, tol);
  const double cut = tol.threshold(frobenius_norm(choi));
  if (e.values.back() < -cut) {
    throw NotCompletelyPositiveError(
        "Choi matrix has eigenvalue " + std::to_string(e.values.back()),
        BipartiteVector(c.shape(), e.vectors.col(e.values.size() - 1)), e.values.back());
  }
  std::vector<Matrix> ops;
  for (std::size_t x = 0; x < e.values.size() && e.values[x] > cut; ++x) {
    BipartiteVector v(c.shape(), e.vectors.col(x));
    ops.push_back(std::sqrt(e.values[x]) * hat(v));
  }
  if (ops.empty()) ops.emplace_back(c.shape().m, c.shape().n);  // zero map
  return KrausSet(c.shape(), std::move(ops));
}

/// rho -> superop * vec(rho), with vec index j*n + l for rho[j, l].
inline Matrix apply(const Channel& c, const Matrix& rho) {
  const std::size_t m = c.output_dim(), n = c.input_dim();
  require(rho.rows() == n && rho.cols() == n, ErrorKind::DimensionMismatch,
          "apply: input must be " + std::to_string(n) + "x" + std::to_string(n));
  const Matrix super = superop_from_channel(c);
  const Matrix vec(n * n, 1, {rho.data().begin(), rho.data().end()});
  const Matrix out = matmul(super, vec);
  return Matrix(m, m, {out.data().begin(), out.data().end()});
}

struct SandwichSides {
  Matrix direct;        // kappa $(rho sigma) tau
  Matrix partial_trace;  // Tr_2((kappa (x) rho^t) choi (tau (x) sigma^t))
};

inline SandwichSides sandwich_sides(const Channel& c, const Matrix& kappa, const Matrix& rho,
                                    const Matrix& sigma, const Matrix& tau) {
  const std::size_t m = c.output_dim(), n = c.input_dim();
  auto check_dims = [](const Matrix& x, std::size_t d, const char* name) {
    require(x.rows() == d && x.cols() == d, ErrorKind::DimensionMismatch,
            std::string("sandwich: ") + name + " must be " + std::to_string(d) + "x" +
                std::to_string(d));
  };
  check_dims(kappa, m, "kappa");
  check_dims(tau, m, "tau");
  check_dims(rho, n, "rho");
  check_dims(sigma, n, "sigma");
  SandwichSides out;
  out.direct = matmul(matmul(kappa, apply(c, matmul(rho, sigma))), tau);
  const Matrix product = matmul(matmul(kron(kappa, transpose(rho)), c.choi_matrix()),
                                kron(tau, transpose(sigma)));
  out.partial_trace = partial_trace_2(BipartiteOperator(c.shape(), product));
  return out;
}

/// kappa $(rho sigma) tau == Tr_2((kappa (x) rho^t) $ (tau (x) sigma^t)).
inline bool sandwich_identity_check(const Channel& c, const Matrix& kappa, const Matrix& rho,
                                    const Matrix& sigma, const Matrix& tau,
                                    const Tolerance& tol = {}) {
  const SandwichSides s = sandwich_sides(c, kappa, rho, sigma, tau);
  return approx_equal(s.direct, s.partial_trace, tol);
}

/// The map $ (x) Id_r from M_{nr} to M_{mr}; composite indices (i,s) -> i*r + s.
inline Channel extend_with_identity(const Channel& c, std::size_t r) {
  require(r >= 1, ErrorKind::InvalidArgument, "extend_with_identity: r must be positive");
  const std::size_t m = c.output_dim(), n = c.input_dim();
  const BipartiteShape shape(m * r, n * r);
  Matrix choi(shape.dim(), shape.dim());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Complex value = c.choi()(i, j, k, l);
          if (value == Complex{}) continue;
          for (std::size_t s = 0; s < r; ++s)
            for (std::size_t t = 0; t < r; ++t)
              choi(shape.flat(i * r + s, j * r + s), shape.flat(k * r + t, l * r + t)) = value;
        }
  return Channel(shape, std::move(choi));
}

// ---------------------------------------------------------------------------
// Predicates

inline bool is_hermitian_preserving(const Channel& c, const Tolerance& tol = {}) {
  return is_hermitian(c.choi_matrix(), tol);
}

enum class PositivityOutcome { NotPositive, NoViolationFound };

struct PositivityVerdict {
  PositivityOutcome outcome = PositivityOutcome::NoViolationFound;
  std::optional<std::pair<Matrix, Matrix>> witness;  // (psi in C^m, phi in C^n)
  std::size_t samples_used = 0;
};

/// One-sided randomized falsifier for positivity preservation: tests
/// <psi phi| choi |psi phi> >= -threshold on random product vectors.
/// NoViolationFound is not a proof of positivity.
template <class Urbg>
PositivityVerdict check_positive_preserving(const Channel& c, std::size_t sample_count,
                                            Urbg& rng, const Tolerance& tol = {}) {
  require(is_hermitian_preserving(c, tol), ErrorKind::NotHermitianPreserving,
          "positivity falsifier requires a Hermitian-preserving map");
  const Matrix& choi = c.choi_matrix();
  const double cut = tol.threshold(frobenius_norm(choi));
  PositivityVerdict out;
  for (std::size_t k = 0; k < sample_count; ++k) {
    Matrix psi = random::unit_vector(c.output_dim(), rng);
    Matrix phi = random::unit_vector(c.input_dim(), rng);
    const Matrix v = kron(psi, phi);
    const double value = dot(v, matmul(choi, v)).real();
    if (value < -cut) {
      out.outcome = PositivityOutcome::NotPositive;
      out.witness.emplace(std::move(psi), std::move(phi));
      out.samples_used = k + 1;
      return out;
    }
  }
  out.samples_used = sample_count;
  return out;
}

inline PositivityVerdict check_positive_preserving(const Channel& c, std::size_t sample_count,
                                                   std::uint64_t seed,
                                                   const Tolerance& tol = {}) {
  std::mt19937_64 rng(seed);
  return check_positive_preserving(c, sample_count, rng, tol);
}

/// The six equivalent trace-preservation conditions, each evaluated on a
/// different representation. The Kraus-based conditions (i) and (iii) are
/// absent when the map is not CP.
struct TpConditions {
  std::optional<bool> kraus_sum;        // (i)   sum A^dagger A = Id_n
  bool superop_trace_rows = false;      // (ii)  sum_k $_{kk;jl} = delta_jl
  std::optional<bool> check_kraus_sum;  // (iii) sum check(A) check(A)^dagger = Id_n
  bool check_identity = false;          // (iv)  check($)(Id_m) = Id_n
  bool partial_trace = false;           // (v)   Tr_1($) = Id_n
  bool choi_indices = false;            // (vi)  $_{kj;kl} = delta_jl

  bool agree() const {
    const bool ref = partial_trace;
    return superop_trace_rows == ref && check_identity == ref && choi_indices == ref &&
           (!kraus_sum || *kraus_sum == ref) && (!check_kraus_sum || *check_kraus_sum == ref);
  }
};

inline TpConditions six_tp_conditions(const Channel& c, const Tolerance& tol = {}) {
  const std::size_t m = c.output_dim(), n = c.input_dim();
  const Matrix id_n = Matrix::identity(n);
  TpConditions out;

  if (is_completely_positive(c, tol).completely_positive) {
    const KrausSet k = kraus_from_channel(c, tol);
    Matrix hat_sum(n, n), check_sum(n, n);
    for (const Matrix& a : k.ops()) {
      hat_sum += matmul(adjoint(a), a);
      const Matrix ac = transpose(a);
      check_sum += matmul(ac, adjoint(ac));
    }
    out.kraus_sum = approx_equal(hat_sum, id_n, tol);
    out.check_kraus_sum = approx_equal(check_sum, id_n, tol);
  }

  const Matrix super = superop_from_channel(c);
  Matrix rows(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < m; ++k) rows(j, l) += super(k * m + k, j * n + l);
  out.superop_trace_rows = approx_equal(rows, id_n, tol);

  const Matrix check_super = reshuffle_check(c.choi());
  Matrix vec_id(m * m, 1);
  for (std::size_t i = 0; i < m; ++i) vec_id[i * m + i] = 1.0;
  const Matrix image = matmul(check_super, vec_id);
  out.check_identity =
      approx_equal(Matrix(n, n, {image.data().begin(), image.data().end()}), id_n, tol);

  out.partial_trace = approx_equal(partial_trace_1(c.choi()), id_n, tol);

  Matrix direct(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < m; ++k) direct(j, l) += c.choi()(k, j, k, l);
  out.choi_indices = approx_equal(direct, id_n, tol);
  return out;
}

/// Tr_1($) = Id_n.
inline bool is_trace_preserving(const Channel& c, const Tolerance& tol = {}) {
  return approx_equal(partial_trace_1(c.choi()), Matrix::identity(c.input_dim()), tol);
}

/// $(Id_n) = Tr_2($) = Id_m.
inline bool is_unital(const Channel& c, const Tolerance& tol = {}) {
  return approx_equal(partial_trace_2(c.choi()), Matrix::identity(c.output_dim()), tol);
}

inline bool is_bistochastic(const Channel& c, const Tolerance& tol = {}) {
  return is_unital(c, tol) && is_trace_preserving(c, tol);
}

/// Rank of the Choi matrix: eigenvalues with |lambda| above
/// max(abs, rel * ||choi||_F). For CP maps this counts the positive ones.
inline std::size_t higher_rank(const Channel& c, const Tolerance& tol = {}) {
  const Matrix& choi = c.choi_matrix();
  const HermitianEigen e = hermitian_eig(choi, tol);
  const double cut = tol.threshold(frobenius_norm(choi));
  std::size_t r = 0;
  for (double v : e.values)
    if (std::abs(v) > cut) ++r;
  return r;
}

struct Factorizability {
  Complex superop_value;  // (Tr $(Id_n))^2 - sum_jl Tr($(E_jl)^dagger $(E_jl))
  double purity_value = 0.0;  // Tr($)^2 - Tr($^2)
  double normalized = 0.0;    // |superop_value| / Tr($)^2
  bool factorizable = false;
};

/// Factorizability condition evaluated from the superoperator, alongside the
/// purity form on the Choi matrix. Factorizable iff
/// |value| <= max(abs, rel) * Tr($)^2.
inline Factorizability factorizability(const Channel& c, const Tolerance& tol = {}) {
  const CpCheck cp = is_completely_positive(c, tol);
  if (!cp.completely_positive)
    throw NotCompletelyPositiveError("factorizability requires a CP map", cp.witness,
                                     cp.min_eigenvalue);
  const std::size_t m = c.output_dim(), n = c.input_dim();
  const Matrix super = superop_from_channel(c);
  Complex trace_of_image{};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) trace_of_image += super(i * m + i, j * n + j);
  double image_norms = 0.0;
  for (const Complex& z : super.data()) image_norms += std::norm(z);

  Factorizability out;
  out.superop_value = trace_of_image * trace_of_image - image_norms;
  const Matrix& choi = c.choi_matrix();
  const double tr = trace(choi).real();
  out.purity_value = tr * tr - trace(matmul(choi, choi)).real();
  const double scale = tr * tr;
  out.normalized = scale > 0.0 ? std::abs(out.superop_value) / scale : 0.0;
  out.factorizable = std::abs(out.superop_value) <= std::max(tol.abs, tol.rel) * scale;
  return out;
}

inline bool is_factorizable(const Channel& c, const Tolerance& tol = {}) {
  return factorizability(c, tol).factorizable;
}

/// rho -> V rho V^dagger with V^dagger V = Id_n: n <= m, CP, factorizable, TP.
inline bool is_isometric_channel(const Channel& c, const Tolerance& tol = {}) {
  if (c.input_dim() > c.output_dim()) return false;
  if (!is_completely_positive(c, tol).completely_positive) return false;
  return is_trace_preserving(c, tol) && is_factorizable(c, tol);
}

/// Index form of the isometry test: $_{kk;jl} = delta_jl and
/// sum_jl Tr($(E_jl)^dagger $(E_jl)) = n^2. Only matches is_isometric_channel
/// on CP maps; the transpose map passes it.
inline bool isometric_index_form(const Channel& c, const Tolerance& tol = {}) {
  const double n = static_cast<double>(c.input_dim());
  const Matrix super = superop_from_channel(c);
  double image_norms = 0.0;
  for (const Complex& z : super.data()) image_norms += std::norm(z);
  return six_tp_conditions(c, tol).superop_trace_rows &&
         std::abs(image_norms - n * n) <= tol.threshold(n * n);
}

/// n^2 x n^2 matrix with entry ((j,j'), (l,l')) = sum_{ik} conj($_{ij;kl}) $_{ij';kl'};
/// the Choi matrix of $^dagger o $.
inline Matrix extremality_matrix(const Channel& c) {
  const std::size_t m = c.output_dim(), n = c.input_dim();
  const BipartiteOperator& s = c.choi();
  Matrix out(n * n, n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t jp = 0; jp < n; ++jp)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t lp = 0; lp < n; ++lp) {
          Complex sum{};
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) sum += std::conj(s(i, j, k, l)) * s(i, jp, k, lp);
          out(j * n + jp, l * n + lp) = sum;
        }
  return out;
}

/// Dimension of span{A_x^dagger A_y} in M_n for any (not necessarily
/// minimal) Kraus decomposition.
inline std::size_t kraus_product_span_dimension(const KrausSet& k, const Tolerance& tol = {}) {
  const std::size_t n = k.shape().n;
  const std::size_t count = k.size();
  Matrix stack(count * count, n * n);
  for (std::size_t x = 0; x < count; ++x)
    for (std::size_t y = 0; y < count; ++y) {
      const Matrix prod = matmul(adjoint(k[x]), k[y]);
      for (std::size_t e = 0; e < n * n; ++e) stack(x * count + y, e) = prod[e];
    }
  return numerical_rank(stack, tol);
}

struct Extremality {
  std::size_t higher_rank = 0;
  std::size_t extremality_matrix_rank = 0;  // rank of the n^2 x n^2 matrix
  std::size_t kraus_span_dimension = 0;     // dim span{A_x^dagger A_y}
  bool extremal = false;
  bool paths_agree = false;
};

/// Extremality among trace-preserving CP maps. Primary path: rank of the
/// extremality matrix equals r^2. Secondary path: span of the products of
/// the minimal Kraus set has dimension r^2.
inline Extremality extremality(const Channel& c, const Tolerance& tol = {}) {
  const CpCheck cp = is_completely_positive(c, tol);
  if (!cp.completely_positive)
    throw NotCompletelyPositiveError("extremality requires a CP map", cp.witness,
                                     cp.min_eigenvalue);
  require(is_trace_preserving(c, tol), ErrorKind::NotTracePreserving,
          "extremality requires a trace-preserving map");
  Extremality out;
  out.higher_rank = higher_rank(c, tol);
  const std::size_t r2 = out.higher_rank * out.higher_rank;
  out.extremality_matrix_rank = numerical_rank(extremality_matrix(c), tol);
  out.kraus_span_dimension = kraus_product_span_dimension(kraus_from_channel(c, tol), tol);
  out.extremal = out.extremality_matrix_rank == r2;
  out.paths_agree = out.extremal == (out.kraus_span_dimension == r2);
  return out;
}

inline bool is_extremal_tp(const Channel& c, const Tolerance& tol = {}) {
  return extremality(c, tol).extremal;
}

// ---------------------------------------------------------------------------
// Maps built from maps

/// Hilbert-Schmidt adjoint M_m -> M_n; superoperator is the conjugate transpose.
inline Channel adjoint_channel(const Channel& c) {
  return channel_from_superop(adjoint(superop_from_channel(c)),
                              BipartiteShape(c.input_dim(), c.output_dim()));
}

/// outer o inner.
inline Channel compose(const Channel& outer, const Channel& inner) {
  require(inner.output_dim() == outer.input_dim(), ErrorKind::DimensionMismatch,
          "compose: inner output dim " + std::to_string(inner.output_dim()) +
              " != outer input dim " + std::to_string(outer.input_dim()));
  return channel_from_superop(
      matmul(superop_from_channel(outer), superop_from_channel(inner)),
      BipartiteShape(outer.output_dim(), inner.input_dim()));
}

inline bool channel_equal(const Channel& a, const Channel& b, const Tolerance& tol = {}) {
  require(a.shape() == b.shape(), ErrorKind::DimensionMismatch,
          "channel_equal: shapes " + to_string(a.shape()) + " and " + to_string(b.shape()));
  return approx_equal(a.choi_matrix(), b.choi_matrix(), tol);
}

// ---------------------------------------------------------------------------
// Aggregate classification

struct ChannelVerdict {
  bool hermitian_preserving = false;
  bool completely_positive = false;
  double min_choi_eigenvalue = 0.0;
  bool trace_preserving = false;
  bool unital = false;
  bool bistochastic = false;
  bool factorizable = false;
  bool isometric = false;
  std::size_t higher_rank = 0;
  std::optional<bool> extremal_tp;            // present iff trace_preserving && CP
  std::optional<BipartiteVector> cp_witness;  // eigenvector of a negative eigenvalue
};

inline ChannelVerdict classify(const Channel& c, const Tolerance& tol = {}) {
  ChannelVerdict v;
  v.hermitian_preserving = is_hermitian_preserving(c, tol);
  const CpCheck cp = is_completely_positive(c, tol);
  v.completely_positive = cp.completely_positive;
  v.min_choi_eigenvalue = cp.min_eigenvalue;
  v.cp_witness = cp.witness;
  v.trace_preserving = is_trace_preserving(c, tol);
  v.unital = is_unital(c, tol);
  v.bistochastic = v.trace_preserving && v.unital;
  // Non-Hermitian Choi matrices have no eigenvalue rank; fall back to the
  // singular-value rank.
  v.higher_rank = v.hermitian_preserving ? higher_rank(c, tol)
                                         : numerical_rank(c.choi_matrix(), tol);
  if (v.completely_positive) {
    v.factorizable = is_factorizable(c, tol);
    v.isometric = is_isometric_channel(c, tol);
    if (v.trace_preserving) v.extremal_tp = is_extremal_tp(c, tol);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Standard maps

inline Channel identity_channel(std::size_t n) {
  return Channel(projector(canonical_bell(n)));
}

/// rho -> rho^t; its Choi matrix is the swap operator.
inline Channel transpose_channel(std::size_t n) {
  const BipartiteShape shape(n, n);
  Matrix choi(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) choi(shape.flat(i, j), shape.flat(j, i)) = 1.0;
  return Channel(shape, std::move(choi));
}

/// rho -> Tr(rho) Id_n / n.
inline Channel depolarizing_channel(std::size_t n) {
  Matrix choi = Matrix::identity(n * n);
  choi /= static_cast<double>(n);
  return Channel(BipartiteShape(n, n), std::move(choi));
}

/// rho -> u rho u^dagger.
inline Channel unitary_channel(const Matrix& u) {
  return channel_from_kraus(KrausSet(std::vector<Matrix>{u}));
}

namespace random {

/// count independent complex-normal m x n Kraus operators (CP, not TP).
template <class Urbg>
KrausSet kraus_set(std::size_t m, std::size_t n, std::size_t count, Urbg& rng) {
  std::vector<Matrix> ops;
  for (std::size_t x = 0; x < count; ++x) ops.push_back(complex_normal(m, n, rng));
  return KrausSet(BipartiteShape(m, n), std::move(ops));
}

/// Trace-preserving Kraus set: the blocks of a random (count*m) x n isometry.
template <class Urbg>
KrausSet tp_kraus_set(std::size_t m, std::size_t n, std::size_t count, Urbg& rng) {
  require(count * m >= n, ErrorKind::InvalidArgument,
          "tp_kraus_set: count * m must be at least n");
  const Matrix v = isometry(count * m, n, rng);
  std::vector<Matrix> ops;
  for (std::size_t x = 0; x < count; ++x) ops.push_back(v.block(x * m, 0, m, n));
  return KrausSet(BipartiteShape(m, n), std::move(ops));
}

}  // namespace random

}  // namespace choi

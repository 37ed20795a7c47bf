// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>

#include "superfock/gaussian.hpp"

namespace superfock {

/// Max-norm residuals of the four orthogonality identities.
struct OrthogonalityResiduals {
  Real uu_vv = 0;    ///< U U^dag + V V^dag - I
  Real uu_vv_t = 0;  ///< U^dag U + V^T conj(V) - I
  Real uv_vu = 0;    ///< U V^T + V U^T
  Real uv_vu_t = 0;  ///< U^dag V + V^T conj(U)

  Real max() const { return std::max(std::max(uu_vv, uu_vv_t), std::max(uv_vu, uv_vu_t)); }
};

OrthogonalityResiduals orthogonality_residuals(const Matrix& u, const Matrix& v);

inline constexpr Real kGroupTol = 1e-9;

/// Element R(U,V) of the restricted orthogonal group, f -> U f + V conj(f).
class OrthogonalTransform {
 public:
  OrthogonalTransform() = default;
  /// Throws ValidationError unless all residuals are <= tol.
  OrthogonalTransform(Matrix u, Matrix v, Real tol = kGroupTol);

  static OrthogonalTransform identity(int d);
  /// R(S, 0) for a unitary S.
  static OrthogonalTransform unitary(const Matrix& s, Real tol = kGroupTol);
  /// Skips validation; for results of group operations on valid inputs.
  static OrthogonalTransform unchecked(Matrix u, Matrix v);

  int dim() const { return int(u_.rows()); }
  const Matrix& U() const { return u_; }
  const Matrix& V() const { return v_; }
  Vector apply(const Vector& f) const { return u_ * f + v_ * f.conjugate(); }

 private:
  Matrix u_, v_;
};

struct ValidationReport {
  OrthogonalityResiduals residuals;
  bool ok = false;
};

ValidationReport validate(const Matrix& u, const Matrix& v, Real tol = kGroupTol);

/// R2 R1.
OrthogonalTransform compose(const OrthogonalTransform& r2, const OrthogonalTransform& r1);
OrthogonalTransform inverse(const OrthogonalTransform& r);

/// Rank bands relative to max(sigma_max, 1): below `zero` is a kernel
/// direction, below `ambiguous` (and not zero) is refused.
struct RankTolerance {
  Real zero = 1e-10;
  Real ambiguous = 1e-8;
};

/// Splitting H = H0 + H1 with H0 = ker U^dag and F = F0 + F1 with F0 = ker U.
struct KernelDecomposition {
  int n = 0;
  Matrix h0, h1;  ///< orthonormal bases (columns)
  Matrix f0, f1;
  Matrix p0, p1, q0, q1;
};

KernelDecomposition kernel_decomposition(const OrthogonalTransform& r, RankTolerance tol = {});

/// Number of singular values of U in the kernel band; throws AmbiguityError inside the band.
int kernel_dim(const Matrix& u, RankTolerance tol = {});

/// Deterministic orthonormal basis of ran(P) for an orthogonal projector P.
///
/// Standard basis vectors are projected greedily by largest residual; each
/// vector is phased so its largest-magnitude entry is real positive.
Matrix canonical_basis(const Matrix& projector, int rank);

/// Moore-Penrose inverse; singular values below rel_tol * sigma_max are dropped.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> gen_inverse(
    const Eigen::MatrixBase<Derived>& a, Real rel_tol = 1e-8) {
  using M = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::JacobiSVD<M> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const Real smax = s.size() ? Real(s[0]) : 0.0;
  M out = M::Zero(a.cols(), a.rows());
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s[k] > rel_tol * smax && s[k] > 0)
      out += svd.matrixV().col(k) * (Real(1) / s[k]) * svd.matrixU().col(k).adjoint();
  return out;
}

/// Orbit coordinate X = V conj(U)^(-1) together with the H0 basis.
struct CosetPoint {
  SkewMatrix x;
  Matrix h0;
};

CosetPoint coset_coordinate(const OrthogonalTransform& r, RankTolerance tol = {});

/// R(L, W) with L = (I + X X^dag)^{-1/2}, W = X (I + X^dag X)^{-1/2}.
OrthogonalTransform lift(const SkewMatrix& x);

/// ||U||_op + ||V||_HS.
Real group_norm(const OrthogonalTransform& r);

enum class Component { identity, other };

Component component(const OrthogonalTransform& r, RankTolerance tol = {});

/// A^{-1/2} for a Hermitian positive definite A.
Matrix inverse_sqrt_hermitian(const Matrix& a);

}  // namespace superfock

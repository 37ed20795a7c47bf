// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "superfock/fock.hpp"

namespace superfock {

inline constexpr Real kSkewTol = 1e-10;

/// Complex d x d matrix with X^T = -X, symmetrized on construction.
class SkewMatrix {
 public:
  SkewMatrix() = default;
  /// Accepts x when max|x + x^T| <= tol (1 + max|x|); throws ValidationError otherwise.
  explicit SkewMatrix(const Matrix& x, Real tol = kSkewTol);

  static SkewMatrix zero(int d) { return SkewMatrix(Matrix::Zero(d, d)); }
  /// Residual max|x + x^T| normalized as in the constructor.
  static Real skewness(const Matrix& x);

  int dim() const { return int(x_.rows()); }
  const Matrix& matrix() const { return x_; }
  SkewMatrix adjoint() const { return SkewMatrix(x_.adjoint()); }

 private:
  Matrix x_;
};

/// Pfaffians of all principal submatrices, indexed by subset bitmask.
///
/// First-row expansion memoized over subsets; odd subsets get zero.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> pfaffian_table(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const int n = int(m.rows());
  require_dims(m.rows() == m.cols(), "pfaffian: matrix must be square");
  require_dims(n <= kMaxIndices, "pfaffian: dimension too large for subset expansion");
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> pf = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(Eigen::Index(1) << n);
  pf[0] = Scalar(1);
  const Bits full = full_set(n);
  for (Bits s = 1; s <= full; ++s) {
    if (popcount(s) & 1) continue;
    const int i0 = std::countr_zero(s);
    const Bits rest = s & (s - 1);
    Scalar acc(0);
    for (Bits r = rest; r; r &= r - 1) {
      const int j = std::countr_zero(r);
      const Bits between = rest & ((Bits(1) << j) - 1);
      const Scalar term = m(i0, j) * pf[rest & ~(Bits(1) << j)];
      acc += (popcount(between) & 1) ? -term : term;
    }
    pf[s] = acc;
  }
  return pf;
}

template <typename Derived>
typename Derived::Scalar pfaffian(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() % 2) return typename Derived::Scalar(0);
  return pfaffian_table(m)[full_set(int(m.rows()))];
}

inline Complex pfaffian(const SkewMatrix& x) { return pfaffian(x.matrix()); }

/// Degree-2 tensor with <Omega(X)||f ^ g> = <f||X g>.
FockVector omega(const SkewMatrix& x);
/// exp Omega(X); amplitude on A is Pf of (X^T) restricted to A.
FockVector exp_omega(const SkewMatrix& x);

/// X = sum_m z_m (e_m e_{-m}^T - e_{-m} e_m^T) with orthonormal e_{+-m}.
struct SkewCanonicalForm {
  std::vector<Real> z;  ///< descending, positive
  Matrix e_plus;        ///< columns e_m
  Matrix e_minus;       ///< columns e_{-m}
  Matrix kernel;        ///< orthonormal basis of the complement

  Matrix reconstruct() const;
};

SkewCanonicalForm skew_canonical(const SkewMatrix& x, Real rel_tol = 1e-12);

/// (exp Omega(X) | exp Omega(Y)) as a subset-Pfaffian sum.
Complex overlap_det(const SkewMatrix& x, const SkewMatrix& y);

/// The three expressions for ||exp Omega(X)||^2.
struct GaussianNorms {
  Real subset_sum;
  Real sqrt_det;
  Real pair_product;
  Real bound;  ///< exp(||X||_2^2 / 2)
};

GaussianNorms gaussian_norms(const SkewMatrix& x);
Real gaussian_norm(const SkewMatrix& x);

}  // namespace superfock

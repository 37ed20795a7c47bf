// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#include "superfock/orthogroup.hpp"

#include <cmath>
#include <utility>

namespace superfock {

namespace {

struct Svd {
  Matrix left, right;
  RealVector sigma;
};

Svd full_svd(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {svd.matrixU(), svd.matrixV(), svd.singularValues()};
}

// Count of kernel singular values; sigma is sorted descending.
int banded_kernel(const RealVector& sigma, RankTolerance tol) {
  const Real ref = std::max(sigma.size() ? sigma[0] : 0.0, 1.0);
  int n = 0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    const Real s = sigma[k] / ref;
    if (s < tol.zero)
      ++n;
    else if (s < tol.ambiguous)
      throw AmbiguityError("rank decision ambiguous: singular value " + std::to_string(sigma[k]) +
                           " lies inside the tolerance band");
  }
  return n;
}

// Pseudo-inverse dropping the trailing `n` singular directions.
Matrix truncated_inverse(const Matrix& a, int n) {
  const Svd s = full_svd(a);
  const Eigen::Index r = s.sigma.size() - n;
  Matrix out = Matrix::Zero(a.cols(), a.rows());
  for (Eigen::Index k = 0; k < r; ++k) out += s.right.col(k) * (1.0 / s.sigma[k]) * s.left.col(k).adjoint();
  return out;
}

}  // namespace

OrthogonalityResiduals orthogonality_residuals(const Matrix& u, const Matrix& v) {
  require_dims(u.rows() == u.cols() && v.rows() == v.cols() && u.rows() == v.rows(),
               "orthogonality_residuals: U and V must be square of equal size");
  const Matrix id = Matrix::Identity(u.rows(), u.cols());
  OrthogonalityResiduals r;
  r.uu_vv = max_abs(u * u.adjoint() + v * v.adjoint() - id);
  r.uu_vv_t = max_abs(u.adjoint() * u + v.transpose() * v.conjugate() - id);
  r.uv_vu = max_abs(u * v.transpose() + v * u.transpose());
  r.uv_vu_t = max_abs(u.adjoint() * v + v.transpose() * u.conjugate());
  return r;
}

ValidationReport validate(const Matrix& u, const Matrix& v, Real tol) {
  ValidationReport rep;
  rep.residuals = orthogonality_residuals(u, v);
  rep.ok = rep.residuals.max() <= tol;
  return rep;
}

OrthogonalTransform::OrthogonalTransform(Matrix u, Matrix v, Real tol) : u_(std::move(u)), v_(std::move(v)) {
  require_dims(u_.rows() <= kMaxIndices, "OrthogonalTransform: dimension too large");
  const ValidationReport rep = validate(u_, v_, tol);
  if (!rep.ok)
    throw ValidationError("OrthogonalTransform: orthogonality residual " + std::to_string(rep.residuals.max()) +
                          " exceeds tolerance");
}

OrthogonalTransform OrthogonalTransform::identity(int d) {
  return unchecked(Matrix::Identity(d, d), Matrix::Zero(d, d));
}

OrthogonalTransform OrthogonalTransform::unitary(const Matrix& s, Real tol) {
  return OrthogonalTransform(s, Matrix::Zero(s.rows(), s.cols()), tol);
}

OrthogonalTransform OrthogonalTransform::unchecked(Matrix u, Matrix v) {
  require_dims(u.rows() == u.cols() && v.rows() == v.cols() && u.rows() == v.rows(),
               "OrthogonalTransform: U and V must be square of equal size");
  OrthogonalTransform r;
  r.u_ = std::move(u);
  r.v_ = std::move(v);
  return r;
}

OrthogonalTransform compose(const OrthogonalTransform& r2, const OrthogonalTransform& r1) {
  require_dims(r2.dim() == r1.dim(), "compose: dimension mismatch");
  return OrthogonalTransform::unchecked(r2.U() * r1.U() + r2.V() * r1.V().conjugate(),
                                        r2.U() * r1.V() + r2.V() * r1.U().conjugate());
}

OrthogonalTransform inverse(const OrthogonalTransform& r) {
  return OrthogonalTransform::unchecked(r.U().adjoint(), r.V().transpose());
}

int kernel_dim(const Matrix& u, RankTolerance tol) {
  Eigen::JacobiSVD<Matrix> svd(u);
  return banded_kernel(svd.singularValues(), tol);
}

Matrix canonical_basis(const Matrix& projector, int rank) {
  const Eigen::Index d = projector.rows();
  Matrix residual = projector;
  Matrix basis(d, rank);
  for (int i = 0; i < rank; ++i) {
    Eigen::Index k = 0;
    residual.diagonal().real().maxCoeff(&k);
    Vector v = residual.col(k);
    v /= v.norm();
    Eigen::Index j = 0;
    v.cwiseAbs().maxCoeff(&j);
    v *= std::conj(v[j]) / std::abs(v[j]);
    basis.col(i) = v;
    residual -= v * v.adjoint();
  }
  return basis;
}

KernelDecomposition kernel_decomposition(const OrthogonalTransform& r, RankTolerance tol) {
  const int d = r.dim();
  const Svd s = full_svd(r.U());
  KernelDecomposition k;
  k.n = banded_kernel(s.sigma, tol);
  const Matrix a0 = s.left.rightCols(k.n), b0 = s.right.rightCols(k.n);
  const Matrix id = Matrix::Identity(d, d);
  k.p0 = a0 * a0.adjoint();
  k.q0 = b0 * b0.adjoint();
  k.p1 = id - k.p0;
  k.q1 = id - k.q0;
  k.h0 = canonical_basis(k.p0, k.n);
  k.h1 = canonical_basis(k.p1, d - k.n);
  k.f0 = canonical_basis(k.q0, k.n);
  k.f1 = canonical_basis(k.q1, d - k.n);
  return k;
}

CosetPoint coset_coordinate(const OrthogonalTransform& r, RankTolerance tol) {
  const KernelDecomposition k = kernel_decomposition(r, tol);
  const Matrix x = r.V() * truncated_inverse(r.U().conjugate(), k.n);
  return {SkewMatrix(x, 1e-8), k.h0};
}

Matrix inverse_sqrt_hermitian(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(a);
  if (eig.info() != Eigen::Success) throw std::runtime_error("inverse_sqrt_hermitian: eigensolver failed");
  if (a.rows() && eig.eigenvalues().minCoeff() <= 0)
    throw ValidationError("inverse_sqrt_hermitian: matrix is not positive definite");
  const RealVector w = eig.eigenvalues().cwiseSqrt().cwiseInverse();
  return eig.eigenvectors() * w.cast<Complex>().asDiagonal() * eig.eigenvectors().adjoint();
}

OrthogonalTransform lift(const SkewMatrix& xs) {
  const Matrix& x = xs.matrix();
  const Matrix id = Matrix::Identity(x.rows(), x.cols());
  const Matrix l = inverse_sqrt_hermitian(id + x * x.adjoint());
  const Matrix w = x * inverse_sqrt_hermitian(id + x.adjoint() * x);
  return OrthogonalTransform(l, w);
}

Real group_norm(const OrthogonalTransform& r) {
  Eigen::JacobiSVD<Matrix> svd(r.U());
  const Real op = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  return op + r.V().norm();
}

Component component(const OrthogonalTransform& r, RankTolerance tol) {
  return kernel_dim(r.U(), tol) % 2 ? Component::other : Component::identity;
}

}  // namespace superfock

// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#include "superfock/gaussian.hpp"

#include <algorithm>
#include <cmath>

namespace superfock {

Real SkewMatrix::skewness(const Matrix& x) {
  if (x.size() == 0) return 0.0;
  return max_abs(x + x.transpose()) / (1.0 + max_abs(x));
}

SkewMatrix::SkewMatrix(const Matrix& x, Real tol) {
  require_dims(x.rows() == x.cols(), "SkewMatrix: matrix must be square");
  require_dims(x.rows() <= kMaxIndices, "SkewMatrix: dimension too large");
  if (skewness(x) > tol) throw ValidationError("SkewMatrix: X + X^T exceeds tolerance");
  x_ = 0.5 * (x - x.transpose());
}

FockVector omega(const SkewMatrix& x) {
  const int d = x.dim();
  FockVector out(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) out.amplitudes()[(Bits(1) << i) | (Bits(1) << j)] = x.matrix()(j, i);
  return out;
}

FockVector exp_omega(const SkewMatrix& x) {
  return FockVector(x.dim(), pfaffian_table(x.matrix().transpose()));
}

Matrix SkewCanonicalForm::reconstruct() const {
  const Eigen::Index d = e_plus.rows() ? e_plus.rows() : kernel.rows();
  Matrix x = Matrix::Zero(d, d);
  for (std::size_t m = 0; m < z.size(); ++m) {
    const auto ep = e_plus.col(Eigen::Index(m));
    const auto em = e_minus.col(Eigen::Index(m));
    x += z[m] * (ep * em.transpose() - em * ep.transpose());
  }
  return x;
}

SkewCanonicalForm skew_canonical(const SkewMatrix& xs, Real rel_tol) {
  const Matrix& x = xs.matrix();
  const int d = xs.dim();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(x * x.adjoint());
  if (eig.info() != Eigen::Success) throw std::runtime_error("skew_canonical: eigensolver failed");
  const RealVector& lam = eig.eigenvalues();  // ascending
  const Real top = d ? std::max(lam[d - 1], 0.0) : 0.0;

  SkewCanonicalForm form;
  Matrix chosen(d, 0);
  for (int k = d - 1; k >= 0; --k) {
    if (top == 0.0 || lam[k] <= rel_tol * top) break;
    Vector v = eig.eigenvectors().col(k);
    if (chosen.cols()) v -= chosen * (chosen.adjoint() * v);
    const Real r = v.norm();
    if (r < 0.5) continue;
    v /= r;
    const Real z = std::sqrt(lam[k]);
    Vector partner = -(x * v.conjugate()) / z;
    if (chosen.cols()) partner -= chosen * (chosen.adjoint() * partner);
    partner.normalize();
    chosen.conservativeResize(d, chosen.cols() + 2);
    chosen.col(chosen.cols() - 2) = v;
    chosen.col(chosen.cols() - 1) = partner;
    // X conj(e_{-m}) = z_m e_m
    form.z.push_back((v.adjoint() * x * partner.conjugate()).value().real());
  }

  const Eigen::Index r = Eigen::Index(form.z.size());
  form.e_plus.resize(d, r);
  form.e_minus.resize(d, r);
  for (Eigen::Index m = 0; m < r; ++m) {
    form.e_plus.col(m) = chosen.col(2 * m);
    form.e_minus.col(m) = chosen.col(2 * m + 1);
  }

  Matrix proj = Matrix::Identity(d, d) - chosen * chosen.adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> comp(proj);
  const Eigen::Index kdim = d - 2 * r;
  form.kernel = comp.eigenvectors().rightCols(kdim);
  return form;
}

Complex overlap_det(const SkewMatrix& x, const SkewMatrix& y) {
  require_dims(x.dim() == y.dim(), "overlap_det: dimension mismatch");
  return inner(exp_omega(x), exp_omega(y));
}

GaussianNorms gaussian_norms(const SkewMatrix& x) {
  const int d = x.dim();
  GaussianNorms out{};
  out.subset_sum = exp_omega(x).amplitudes().squaredNorm();
  const Matrix m = Matrix::Identity(d, d) + x.matrix().adjoint() * x.matrix();
  out.sqrt_det = std::sqrt(m.determinant().real());
  out.pair_product = 1.0;
  for (Real z : skew_canonical(x).z) out.pair_product *= 1.0 + z * z;
  out.bound = std::exp(0.5 * x.matrix().squaredNorm());
  return out;
}

Real gaussian_norm(const SkewMatrix& x) { return exp_omega(x).norm(); }

}  // namespace superfock

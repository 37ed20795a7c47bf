// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#include "superfock/weyl.hpp"

namespace superfock {

GrassmannElement omega_form(const SuperVector& xi, const SuperVector& eta) {
  return Complex(0.0, -0.5) * (lambda_inner(xi, eta) - lambda_inner(eta, xi));
}

SuperVector act(const OrthogonalTransform& r, const SuperVector& xi) {
  require_dims(r.dim() == xi.modes(), "act: mode mismatch");
  return SuperVector(xi.coeffs() * r.U().transpose() + xi.coeffs().conjugate() * r.V().transpose());
}

RegularOperator weyl_generator(const SuperVector& eta) { return b_plus(eta) - b_minus(eta); }

RegularOperator regular_exp(const RegularOperator& a) {
  RegularOperator term = RegularOperator::identity(a.generators(), a.modes());
  RegularOperator sum = term;
  for (int k = 1; k <= a.generators(); ++k) {
    term = Complex(1.0 / k) * (a * term);
    sum = (sum + term).canonical();
  }
  return sum;
}

RegularOperator WeylOperator::normal_ordered() const {
  const GrassmannElement phase = gexp(Complex(-0.5) * lambda_inner(eta_, eta_));
  return RegularOperator::scalar(phase, eta_.modes()) * regular_exp(b_plus(eta_)) *
         regular_exp(Complex(-1.0) * b_minus(eta_));
}

Matrix WeylOperator::dense() const {
  const Matrix d = weyl_generator(eta_).materialize();
  Matrix term = Matrix::Identity(d.rows(), d.cols());
  Matrix sum = term;
  // D raises the Grassmann degree by one, so D^{G+1} = 0.
  for (int k = 1; k <= eta_.generators(); ++k) {
    term = d * term / Real(k);
    sum += term;
  }
  return sum;
}

ModuleTensor weyl_on_ultracoherent(const SuperVector& eta, const SkewMatrix& x, const SuperVector& xi) {
  require_dims(eta.modes() == x.dim() && xi.modes() == x.dim() && eta.generators() == xi.generators(),
               "weyl_on_ultracoherent: shape mismatch");
  const SuperVector x_eta_star = eta.star().apply(x.matrix());
  const GrassmannElement exponent =
      Complex(-0.5) * lambda_inner(eta, eta) + Complex(0.5) * lambda_inner(eta, x_eta_star - Complex(2.0) * xi);
  return gexp(exponent) * ultracoherent(x, xi + eta - x_eta_star);
}

Real weyl_restricted_residual(const Matrix& s, const Matrix& p, const SuperVector& eta, Real tol) {
  const int d = eta.modes(), g = eta.generators();
  require_dims(s.rows() == d && s.cols() == d && p.rows() == d && p.cols() == d,
               "weyl_restricted_residual: shape mismatch");
  if (max_abs(p * p - p) > tol || max_abs(p - p.adjoint()) > tol)
    throw ValidationError("weyl_restricted_residual: P is not an orthogonal projector");
  if (max_abs(p * s - s * p) > tol) throw ValidationError("weyl_restricted_residual: P and S do not commute");
  if (max_abs(p * s.adjoint() * s * p - p) > tol)
    throw ValidationError("weyl_restricted_residual: S is not unitary on ran P");
  if (max_abs(eta.coeffs() * p.transpose() - eta.coeffs()) > tol)
    throw ValidationError("weyl_restricted_residual: eta is not supported on ran P");
  const Matrix gs = RegularOperator::fock(g, gamma(s)).materialize();
  const Matrix gsp = RegularOperator::fock(g, gamma(s.adjoint() * p)).materialize();
  const Matrix gp = RegularOperator::fock(g, gamma(p)).materialize();
  const Matrix lhs = gs * WeylOperator(eta).dense() * gsp;
  const Matrix rhs = WeylOperator(eta.apply(s)).dense() * gp;
  return max_abs(lhs - rhs);
}

ModuleTensor weyl_factorize(const SuperVector& eta, const Matrix& p1, const Matrix& p2, const ModuleTensor& xi1,
                            const ModuleTensor& xi2, Real tol) {
  const Parity k = xi1.parity(tol);
  if (k == Parity::mixed) throw ValidationError("weyl_factorize: Xi1 has no definite parity");
  const Complex sign = k == Parity::odd ? -1.0 : 1.0;
  const ModuleTensor left = WeylOperator(eta.apply(p1)).apply(xi1);
  const ModuleTensor right = WeylOperator(sign * eta.apply(p2)).apply(xi2);
  return mproduct(left, right);
}

}  // namespace superfock

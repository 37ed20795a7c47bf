// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#include "superfock/bogoliubov.hpp"

#include <cmath>

namespace superfock {

namespace {

Matrix identity(int d) { return Matrix::Identity(d, d); }

Real condition_number(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  const RealVector& s = svd.singularValues();
  if (!s.size()) return 1.0;
  return s[s.size() - 1] > 0 ? s[0] / s[s.size() - 1] : INFINITY;
}

// Columns T[U,V] Gamma(W) e_M for invertible U and unitary W.
Matrix invertible_columns(const Matrix& u, const Matrix& v, const Matrix& w) {
  const int d = int(u.rows());
  const Matrix u_dag_inv = u.adjoint().inverse();
  const SkewMatrix x(v * u.conjugate().inverse(), 1e-8);
  const SkewMatrix y(-(w.transpose() * v.adjoint() * u_dag_inv * w), 1e-8);
  const Vector phi = pfaffian_table(y.matrix());
  const Bits full = full_set(d);
  const Eigen::Index n = fock_dim(d);
  // kphi(M \ K, M) = (-1)^{tau(K, M\K)} phi(K)
  Matrix kphi = Matrix::Zero(n, n);
  for (Bits m = 0; m <= full; ++m)
    for (Bits k = m;; k = (k - 1) & m) {
      if (phi[k] != Complex(0)) kphi(m ^ k, m) += Real(wedge_sign(k, m ^ k)) * phi[k];
      if (k == 0) break;
    }
  return c_norm(x) * right_wedge_matrix(exp_omega(x)) * gamma(u_dag_inv * w) * kphi;
}

}  // namespace

Real c_norm(const SkewMatrix& x) {
  const Matrix m = identity(x.dim()) + x.matrix().adjoint() * x.matrix();
  return std::pow(m.determinant().real(), -0.25);
}

FockVector theta(const SkewMatrix& x) { return c_norm(x) * exp_omega(x); }

Matrix right_wedge_matrix(const FockVector& phi) {
  const int d = phi.modes();
  const Bits full = full_set(d);
  Matrix r = Matrix::Zero(phi.dim(), phi.dim());
  for (Bits a = 0; a <= full; ++a) {
    const Bits comp = full ^ a;
    for (Bits b = comp;; b = (b - 1) & comp) {
      const Complex pb = phi.amplitudes()[b];
      if (pb != Complex(0)) r(a | b, a) += Real(wedge_sign(a, b)) * pb;
      if (b == 0) break;
    }
  }
  return r;
}

Implementer implement_invertible(const OrthogonalTransform& r) {
  const int d = r.dim();
  Implementer out;
  out.source = r;
  if (kernel_dim(r.U()) != 0) throw ValidationError("implement_invertible: U is singular");
  const Real cond = condition_number(r.U());
  if (cond > 1e8) out.warnings.push_back("ill-conditioned U: cond = " + std::to_string(cond));
  out.t = invertible_columns(r.U(), r.V(), identity(d));
  out.e_basis = Matrix(d, 0);
  return out;
}

T0Block t0_duality(const Matrix& j, const Matrix& e, Real tol) {
  const int d = int(j.rows());
  const int n = int(e.cols());
  require_dims(j.cols() == d && e.rows() == d, "t0_duality: shape mismatch");
  const Matrix jtj = j.adjoint() * j;
  if (max_abs(j * j.adjoint() - e * e.adjoint()) > tol || max_abs(jtj * jtj - jtj) > tol ||
      std::abs(jtj.trace().real() - n) > tol)
    throw ValidationError("t0_duality: J is not a partial isometry onto span(e)");
  T0Block b;
  b.e_basis = e;
  b.f_basis = -j.transpose() * e.conjugate();
  const Bits mfull = full_set(n);
  b.op = Matrix::Zero(fock_dim(d), fock_dim(d));
  for (Bits k = 0; k <= mfull; ++k) {
    const Real sign = Real(wedge_sign(k, mfull));
    b.op += sign * wedge_columns(e, mfull ^ k) * wedge_columns(b.f_basis, k).adjoint();
  }
  return b;
}

namespace {

struct GeneralParts {
  KernelDecomposition kd;
  Matrix e, f0;  // T0 bases
  Matrix t_prime;
};

GeneralParts general_parts(const OrthogonalTransform& r, RankTolerance tol) {
  GeneralParts g;
  g.kd = kernel_decomposition(r, tol);
  g.e = g.kd.h0;
  const Matrix j = g.kd.p0 * r.V();
  g.f0 = -j.transpose() * g.e.conjugate();
  const Matrix u0 = g.e * g.f0.adjoint();
  g.t_prime = invertible_columns(r.U() + u0, g.kd.p1 * r.V(), identity(r.dim()));
  return g;
}

}  // namespace

RestrictedImplementer implement_restricted(const OrthogonalTransform& r, RankTolerance tol) {
  const GeneralParts g = general_parts(r, tol);
  return {g.t_prime, g.kd.f1, g.t_prime * gamma(g.kd.q1)};
}

Implementer implement_general(const OrthogonalTransform& r, RankTolerance tol) {
  const int d = r.dim();
  const int n = kernel_dim(r.U(), tol);
  if (n == 0) return implement_invertible(r);

  const GeneralParts g = general_parts(r, tol);
  const Matrix& f1 = g.kd.f1;
  Matrix w(d, d);
  w << g.f0, f1;
  const Bits mfull = full_set(n);
  const Bits full = full_set(d);
  Matrix adapted(fock_dim(d), fock_dim(d));
  for (Bits a = 0; a <= full; ++a) {
    const Bits k = a & mfull, l = a >> n;
    const FockVector left(d, Real(wedge_sign(k, mfull)) * wedge_columns(g.e, mfull ^ k));
    const Real parity = (n * popcount(l)) % 2 ? -1.0 : 1.0;
    const FockVector right(d, parity * (g.t_prime * wedge_columns(f1, l)));
    adapted.col(a) = wedge(left, right).amplitudes();
  }
  Implementer out;
  out.source = r;
  out.kernel_dim = n;
  out.e_basis = g.e;
  out.t = adapted * gamma(w).adjoint();
  return out;
}

Real intertwining_residual(const OrthogonalTransform& r, const Matrix& t) {
  const int d = r.dim();
  require_dims(t.rows() == fock_dim(d) && t.cols() == fock_dim(d), "intertwining_residual: size mismatch");
  Real worst = 0.0;
  for (int k = 0; k < d; ++k)
    for (Complex phase : {Complex(1.0), Complex(0.0, 1.0)}) {
      const Vector f = phase * Vector::Unit(d, k);
      worst = std::max(worst, max_abs(t * delta(f) * t.adjoint() - delta(r.apply(f))));
    }
  return worst;
}

Real unitarity_residual(const Matrix& t) { return max_abs(t.adjoint() * t - Matrix::Identity(t.cols(), t.cols())); }

RegularOperator module_lift(const Matrix& t, int generators) { return RegularOperator::fock(generators, t); }

ModuleTensor lifted_on_coherent(const OrthogonalTransform& r, const SuperVector& xi) {
  const Matrix u_dag_inv = r.U().adjoint().inverse();
  const SkewMatrix x(r.V() * r.U().conjugate().inverse(), 1e-8);
  const GrassmannElement expo = Complex(-0.5) * lambda_bilinear(xi, xi.apply(r.V().adjoint() * u_dag_inv));
  return Complex(c_norm(x)) * (gexp(expo) * ultracoherent(x, xi.apply(u_dag_inv)));
}

ModuleTensor lifted_weyl_on_coherent(const OrthogonalTransform& r, const SuperVector& xi, const SuperVector& eta) {
  const Matrix u_dag_inv = r.U().adjoint().inverse();
  const SkewMatrix x(r.V() * r.U().conjugate().inverse(), 1e-8);
  const SuperVector s = xi + eta;
  const GrassmannElement expo = Complex(-1.0) * lambda_inner(xi, eta) - Complex(0.5) * lambda_inner(xi, xi) -
                                Complex(0.5) * lambda_bilinear(s, s.apply(r.V().adjoint() * u_dag_inv));
  return Complex(c_norm(x)) * (gexp(expo) * ultracoherent(x, s.apply(u_dag_inv)));
}

Cocycle cocycle(const OrthogonalTransform& r2, const OrthogonalTransform& r1, Real tol) {
  const Matrix prod = implement_general(r2).t * implement_general(r1).t;
  const Matrix t21 = implement_general(compose(r2, r1)).t;
  Eigen::Index i = 0, j = 0;
  t21.cwiseAbs().maxCoeff(&i, &j);
  Cocycle c;
  c.chi = prod(i, j) / t21(i, j);
  c.residual = max_abs(prod - c.chi * t21);
  if (c.residual > tol)
    throw ValidationError("cocycle: T(R2)T(R1) is not a multiple of T(R2R1), residual " + std::to_string(c.residual));
  return c;
}

FockVector vacuum_orbit(const OrthogonalTransform& r, RankTolerance tol) {
  const CosetPoint cp = coset_coordinate(r, tol);
  const int d = r.dim();
  const FockVector hat(d, wedge_columns(cp.h0, full_set(int(cp.h0.cols()))));
  return wedge(hat, theta(cp.x));
}

OrbitStep orbit_transform(const OrthogonalTransform& r2, const SkewMatrix& x1) {
  require_dims(r2.dim() == x1.dim(), "orbit_transform: dimension mismatch");
  const Matrix m = r2.U().conjugate() + r2.V().conjugate() * x1.matrix();
  Eigen::JacobiSVD<Matrix> svd(m);
  const RealVector& s = svd.singularValues();
  if (s.size() && s[s.size() - 1] <= 1e-10 * std::max(s[0], 1.0))
    throw ValidationError("orbit_transform: conj(U2) + conj(V2) X1 is singular; the orbit leaves the invertible chart");
  const SkewMatrix x3((r2.U() * x1.matrix() + r2.V()) * m.inverse(), 1e-8);
  const FockVector image(r2.dim(), implement_general(r2).t * theta(x1).amplitudes());
  const FockVector target = theta(x3);
  const Complex chi = inner(target, image);
  return {chi, x3, (image - chi * target).norm()};
}

}  // namespace superfock

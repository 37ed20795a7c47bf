// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "superfock/module.hpp"
#include "superfock/orthogroup.hpp"

namespace superfock {

/// Unitary T(R) on the Fock space with TDelta(f)T^dag = Delta(Rf).
struct Implementer {
  Matrix t;
  OrthogonalTransform source;
  int kernel_dim = 0;
  /// Basis e_1..e_n of ker U^dag fixing the phase via e_1 ^ ... ^ e_n (empty when n = 0).
  Matrix e_basis;
  std::vector<std::string> warnings;
};

/// det(I + X^dag X)^{-1/4}.
Real c_norm(const SkewMatrix& x);

/// c_X exp Omega(X).
FockVector theta(const SkewMatrix& x);

/// Matrix of F -> F ^ phi on raw amplitudes.
Matrix right_wedge_matrix(const FockVector& phi);

Implementer implement_invertible(const OrthogonalTransform& r);

/// Duality block between A(F0) and A(H0).
struct T0Block {
  Matrix e_basis;  ///< e_m, orthonormal in H0
  Matrix f_basis;  ///< f_m = -J^T conj(e_m), orthonormal in F0
  /// sum_K |T0 f_K><f_K| as an operator on the full Fock space.
  Matrix op;
};

/// Requires J J^dag = e e^dag and J^dag J a rank-n projector.
T0Block t0_duality(const Matrix& j, const Matrix& e_basis, Real tol = 1e-9);

/// T1 realized through T' = T[U + U0, P1 V].
struct RestrictedImplementer {
  Matrix t_prime;
  Matrix f1;  ///< orthonormal basis of F1 = (ker U)^perp
  Matrix op;  ///< T' Gamma(Q1)
};

RestrictedImplementer implement_restricted(const OrthogonalTransform& r, RankTolerance tol = {});

Implementer implement_general(const OrthogonalTransform& r, RankTolerance tol = {});

/// max over f in {e_k, i e_k} of max|T Delta(f) T^dag - Delta(Rf)|.
Real intertwining_residual(const OrthogonalTransform& r, const Matrix& t);
Real unitarity_residual(const Matrix& t);

/// kappa_0 (x) T.
RegularOperator module_lift(const Matrix& t, int generators);

/// T-hat exp(xi) = c_X exp(-<xi||V^dag U^dag^{-1} xi>/2) Psi(X, U^dag^{-1} xi); U invertible.
ModuleTensor lifted_on_coherent(const OrthogonalTransform& r, const SuperVector& xi);
/// T-hat W(xi) exp(eta) in closed form; U invertible.
ModuleTensor lifted_weyl_on_coherent(const OrthogonalTransform& r, const SuperVector& xi, const SuperVector& eta);

struct Cocycle {
  Complex chi;
  Real residual;
};

/// chi with T(R2) T(R1) = chi T(R2 R1); throws ValidationError if residual > tol.
Cocycle cocycle(const OrthogonalTransform& r2, const OrthogonalTransform& r1, Real tol = 1e-8);

/// T(R) 1_vac from the orbit formulas.
FockVector vacuum_orbit(const OrthogonalTransform& r, RankTolerance tol = {});

struct OrbitStep {
  Complex chi;
  SkewMatrix x3;
  Real residual;
};

/// X3 = (U2 X1 + V2)(conj U2 + conj V2 X1)^{-1} and the phase with T(R2) Theta(X1) = chi Theta(X3).
OrbitStep orbit_transform(const OrthogonalTransform& r2, const SkewMatrix& x1);

}  // namespace superfock

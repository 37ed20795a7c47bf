// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Seeded random instances shared by the tests and the CLI self-test.

#include <random>

#include "superfock/grassmann.hpp"
#include "superfock/module.hpp"
#include "superfock/orthogroup.hpp"

namespace superfock {

using Rng = std::mt19937_64;

inline Complex random_complex(Rng& rng, Real scale = 1.0) {
  std::normal_distribution<Real> n(0.0, scale);
  return {n(rng), n(rng)};
}

inline Vector random_vector(Rng& rng, Eigen::Index n, Real scale = 1.0) {
  Vector v(n);
  for (auto& x : v) x = random_complex(rng, scale);
  return v;
}

inline Matrix random_matrix(Rng& rng, Eigen::Index r, Eigen::Index c, Real scale = 1.0) {
  Matrix m(r, c);
  for (Eigen::Index j = 0; j < c; ++j)
    for (Eigen::Index i = 0; i < r; ++i) m(i, j) = random_complex(rng, scale);
  return m;
}

inline Matrix random_unitary(Rng& rng, int d) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(rng, d, d));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR();
  for (int k = 0; k < d; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return q;
}

inline SkewMatrix random_skew(Rng& rng, int d, Real scale = 1.0) {
  const Matrix a = random_matrix(rng, d, d, scale);
  return SkewMatrix(a - a.transpose());
}

inline FockVector random_fock(Rng& rng, int d) { return FockVector(d, random_vector(rng, fock_dim(d))); }

inline FockVector random_homogeneous(Rng& rng, int d, int p) { return random_fock(rng, d).degree(p); }

inline GrassmannElement random_grassmann(Rng& rng, int g) {
  return GrassmannElement(g, random_vector(rng, Eigen::Index(1) << g));
}

inline ModuleTensor random_module(Rng& rng, int g, int d) {
  return ModuleTensor(g, d, random_matrix(rng, Eigen::Index(1) << g, fock_dim(d)));
}

inline SuperVector random_supervector(Rng& rng, int g, int d, Real scale = 1.0) {
  return SuperVector(random_matrix(rng, g, d, scale));
}

/// lift(X) R(S, 0) with random skew X and unitary S.
inline OrthogonalTransform random_invertible(Rng& rng, int d, Real scale = 0.7) {
  return compose(lift(random_skew(rng, d, scale)), OrthogonalTransform::unitary(random_unitary(rng, d)));
}

/// Sandwich of a particle-hole swap on n modes with a lift on the rest; dim ker U = n.
inline OrthogonalTransform engineered_singular(Rng& rng, int d, int n) {
  Matrix u_ph = Matrix::Zero(d, d), v_ph = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) (k < n ? v_ph : u_ph)(k, k) = 1.0;
  const OrthogonalTransform ph(u_ph, v_ph);
  Matrix x = Matrix::Zero(d, d);
  if (d - n > 1) x.bottomRightCorner(d - n, d - n) = random_skew(rng, d - n, 0.7).matrix();
  const OrthogonalTransform inner = compose(ph, lift(SkewMatrix(x)));
  const OrthogonalTransform left = OrthogonalTransform::unitary(random_unitary(rng, d));
  const OrthogonalTransform right = OrthogonalTransform::unitary(random_unitary(rng, d));
  return compose(left, compose(inner, right));
}

/// BCS pair on two modes: U = cos(t) I, V = sin(t) J.
inline OrthogonalTransform bcs(Real t) {
  Matrix j(2, 2);
  j << 0, 1, -1, 0;
  return OrthogonalTransform(std::cos(t) * Matrix::Identity(2, 2), std::sin(t) * j);
}

inline Matrix unit_skew() {
  Matrix j(2, 2);
  j << 0, 1, -1, 0;
  return j;
}

}  // namespace superfock

// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "superfock/module.hpp"
#include "superfock/orthogroup.hpp"

namespace superfock {

/// omega(xi, eta) = ((xi|eta) - (eta|xi)) / 2i, an element of Lambda_2.
GrassmannElement omega_form(const SuperVector& xi, const SuperVector& eta);

/// R(mu (x) f) = mu (x) U f + mu* (x) V conj(f), with real generators.
SuperVector act(const OrthogonalTransform& r, const SuperVector& xi);

/// D_eta = b+(eta) - b-(eta).
RegularOperator weyl_generator(const SuperVector& eta);

/// Finite exponential series of a regular operator that raises Grassmann degree.
RegularOperator regular_exp(const RegularOperator& a);

/// W(eta) = exp(b+(eta) - b-(eta)) on the module Fock space.
class WeylOperator {
 public:
  explicit WeylOperator(SuperVector eta) : eta_(std::move(eta)) {}

  const SuperVector& eta() const { return eta_; }
  /// e^{-(eta|eta)/2} exp(b+(eta)) exp(-b-(eta)).
  RegularOperator normal_ordered() const;
  /// Series exponential of the materialized generator.
  Matrix dense() const;
  ModuleTensor apply(const ModuleTensor& x) const { return normal_ordered().apply(x); }

 private:
  SuperVector eta_;
};

inline WeylOperator weyl(const SuperVector& eta) { return WeylOperator(eta); }

/// W(eta) Psi(X, xi) in closed form.
ModuleTensor weyl_on_ultracoherent(const SuperVector& eta, const SkewMatrix& x, const SuperVector& xi);

/// Max residual of Gamma(S) W(eta) Gamma(S^dag P) - W(S eta) Gamma(P) as dense module operators.
///
/// Requires P an orthogonal projector commuting with S, S unitary on ran P
/// and eta supported on ran P.
Real weyl_restricted_residual(const Matrix& s, const Matrix& p, const SuperVector& eta, Real tol = 1e-9);

/// (W(P1 eta) Xi1) o (W((-1)^k P2 eta) Xi2) for Xi1 of definite parity k.
ModuleTensor weyl_factorize(const SuperVector& eta, const Matrix& p1, const Matrix& p2, const ModuleTensor& xi1,
                            const ModuleTensor& xi2, Real tol = 1e-12);

}  // namespace superfock

// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "superfock/fock.hpp"
#include "superfock/gaussian.hpp"
#include "superfock/grassmann.hpp"

namespace superfock {

/// Element of the module Fock space over G generators and d modes.
///
/// amplitudes()(P, A) is the coefficient of kappa_P (x) e_A. The dense
/// operator layout flattens column-major: index P + 2^G * A.
class ModuleTensor {
 public:
  ModuleTensor() = default;
  ModuleTensor(int generators, int modes);
  ModuleTensor(int generators, int modes, Matrix amplitudes);

  /// kappa_0 (x) 1_vac.
  static ModuleTensor vacuum(int generators, int modes);
  /// lambda (x) F.
  static ModuleTensor product(const GrassmannElement& lambda, const FockVector& f);
  static ModuleTensor from_flat(int generators, int modes, const Vector& flat);

  int generators() const { return generators_; }
  int modes() const { return modes_; }
  const Matrix& amplitudes() const { return amps_; }
  Matrix& amplitudes() { return amps_; }
  Complex operator()(ModeSubset gen, ModeSubset mode) const { return amps_(gen.bits, mode.bits); }
  Vector flat() const;

  /// Component in Lambda (x) A_p(H).
  ModuleTensor fock_degree(int p) const;
  /// Component in Lambda_p (x) A_n(H).
  ModuleTensor bidegree(int p, int n) const;
  /// Parity of p + n over the support.
  Parity parity(Real tol = 0.0) const;

  ModuleTensor& operator+=(const ModuleTensor& o);
  ModuleTensor& operator-=(const ModuleTensor& o);
  ModuleTensor& operator*=(Complex s);

 private:
  int generators_ = 0;
  int modes_ = 0;
  Matrix amps_;
};

ModuleTensor operator+(ModuleTensor a, const ModuleTensor& b);
ModuleTensor operator-(ModuleTensor a, const ModuleTensor& b);
ModuleTensor operator*(Complex s, ModuleTensor a);
/// Left multiplication by a Grassmann element.
ModuleTensor operator*(const GrassmannElement& lambda, const ModuleTensor& a);

/// xi = sum_m kappa_m (x) f_m; row m-1 of coeffs() holds f_m.
class SuperVector {
 public:
  SuperVector() = default;
  explicit SuperVector(Matrix coeffs) : c_(std::move(coeffs)) {}
  static SuperVector zero(int generators, int modes) { return SuperVector(Matrix::Zero(generators, modes)); }
  /// kappa_m (x) f.
  static SuperVector term(int generators, int m, const Vector& f);

  int generators() const { return int(c_.rows()); }
  int modes() const { return int(c_.cols()); }
  const Matrix& coeffs() const { return c_; }

  ModuleTensor embed() const;
  /// Involution: kappa_m (x) f -> kappa_m (x) conj(f).
  SuperVector star() const { return SuperVector(c_.conjugate()); }
  /// (1 (x) A) xi.
  SuperVector apply(const Matrix& a) const { return SuperVector(c_ * a.transpose()); }
  Real norm() const { return c_.norm(); }

  SuperVector operator+(const SuperVector& o) const { return SuperVector(c_ + o.c_); }
  SuperVector operator-(const SuperVector& o) const { return SuperVector(c_ - o.c_); }
  SuperVector operator-() const { return SuperVector(-c_); }
  friend SuperVector operator*(Complex s, const SuperVector& x) { return SuperVector(s * x.c_); }

 private:
  Matrix c_;
};

struct RegularTerm {
  GrassmannElement coeff;
  FockOperator op;
};

/// Finite sum of mu_j (x) T_j acting by (mu (x) T)(lambda (x) F) = mu lambda (x) T F.
class RegularOperator {
 public:
  RegularOperator() = default;
  RegularOperator(int generators, int modes) : generators_(generators), modes_(modes) {}

  static RegularOperator identity(int generators, int modes);
  /// kappa_0 (x) T.
  static RegularOperator fock(int generators, const FockOperator& t);
  /// mu (x) I.
  static RegularOperator scalar(const GrassmannElement& mu, int modes);

  int generators() const { return generators_; }
  int modes() const { return modes_; }
  const std::vector<RegularTerm>& terms() const { return terms_; }
  void add_term(const GrassmannElement& mu, const FockOperator& t);

  ModuleTensor apply(const ModuleTensor& x) const;
  /// Dense 2^{G+d} square matrix in the ModuleTensor::flat() layout.
  Matrix materialize() const;
  /// Same operator with one term per generator monomial.
  RegularOperator canonical() const;

  RegularOperator operator+(const RegularOperator& o) const;
  RegularOperator operator-(const RegularOperator& o) const;
  friend RegularOperator operator*(Complex s, RegularOperator a);
  /// Composition.
  RegularOperator operator*(const RegularOperator& o) const;

 private:
  int generators_ = 0;
  int modes_ = 0;
  std::vector<RegularTerm> terms_;
};

ModuleTensor mproduct(const ModuleTensor& a, const ModuleTensor& b);
/// Lambda-valued inner product (lambda (x) F | mu (x) G) = lambda* mu (F|G).
GrassmannElement lambda_inner(const ModuleTensor& a, const ModuleTensor& b);
/// (xi | eta) for supervectors.
GrassmannElement lambda_inner(const SuperVector& xi, const SuperVector& eta);
/// <xi||eta> = (xi* | eta).
GrassmannElement lambda_bilinear(const SuperVector& xi, const SuperVector& eta);

/// Cross norm with the Grassmann weights on the first factor.
Real module_norm(const ModuleTensor& a);
/// sqrt(sum_p (p!)^alpha ||Xi_p||^2) over Fock degrees p.
Real weighted_norm(const ModuleTensor& a, Real alpha);

/// exp(xi) as a terminating series.
ModuleTensor coherent(const SuperVector& xi);
/// exp(xi) o (kappa_0 (x) exp Omega(X)).
ModuleTensor ultracoherent(const SkewMatrix& x, const SuperVector& xi);

RegularOperator b_plus(const SuperVector& eta);
RegularOperator b_minus(const SuperVector& eta);
RegularOperator superadjoint(const RegularOperator& t);

/// All supervectors with coefficient entries in {0, 1, i}, in odometer order.
std::vector<SuperVector> separating_family(int generators, int modes);

/// Rank of Xi -> ((exp zeta | Xi))_zeta over the separating family, as a
/// real-linear count on the 2^G 2^d module amplitudes.
int separating_rank(int generators, int modes, Real rel_tol = 1e-10);

/// Dimension of the space of regular operators vanishing on every exp zeta
/// of the separating family.
int regular_annihilator_dim(int generators, int modes, Real rel_tol = 1e-10);

}  // namespace superfock

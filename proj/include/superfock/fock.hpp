// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "superfock/subset.hpp"

namespace superfock {

/// Element of the antisymmetric Fock space over d modes.
///
/// Amplitudes are stored densely, one per subset, in increasing-bitmask order.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(int modes);
  FockVector(int modes, Vector amplitudes);

  static FockVector vacuum(int modes);
  static FockVector basis(int modes, ModeSubset a);
  /// Degree-one tensor with coefficients f in the standard basis.
  static FockVector one_particle(const Vector& f);

  int modes() const { return modes_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Vector& amplitudes() const { return amps_; }
  Vector& amplitudes() { return amps_; }

  Complex operator[](ModeSubset a) const { return amps_[a.bits]; }
  Complex& operator[](ModeSubset a) { return amps_[a.bits]; }

  Real norm() const { return amps_.norm(); }
  /// Component supported on subsets of cardinality p.
  FockVector degree(int p) const;

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(Complex s);

 private:
  int modes_ = 0;
  Vector amps_;
};

FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);
FockVector operator*(Complex s, FockVector a);

/// Dense 2^d x 2^d operator acting on FockVector amplitudes.
using FockOperator = Matrix;

inline Eigen::Index fock_dim(int modes) { return Eigen::Index(1) << modes; }

FockVector wedge(const FockVector& f, const FockVector& g);
/// Antiunitary involution fixed by e_k* = e_k.
FockVector star(const FockVector& f);
Complex inner(const FockVector& f, const FockVector& g);
/// Symmetric bilinear form <F||G> = (F*|G).
Complex bilinear(const FockVector& f, const FockVector& g);

/// Apply (f ^ .) to raw amplitudes; f has length d.
Vector wedge_vector(const Vector& f, const Vector& amps, int modes);
/// w_{l1} ^ ... ^ w_{lk} for the columns of W selected by L, as raw amplitudes.
Vector wedge_columns(const Matrix& w, Bits l);

FockOperator create(const Vector& f);
FockOperator annihilate(const Vector& f);
/// a+(f) - a-(f).
FockOperator delta(const Vector& f);
/// Second quantization of a one-particle operator B.
FockOperator gamma(const Matrix& b);
/// Gamma(-I).
FockOperator parity_operator(int modes);

}  // namespace superfock

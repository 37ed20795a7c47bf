// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "superfock/subset.hpp"

namespace superfock {

enum class Parity { even, odd, mixed };

/// Element of the Grassmann algebra on G generators with the graded Hilbert norm.
///
/// The amplitude on generator subset K is the coefficient of kappa_K in
/// increasing index order; kappa_0 (the unit) sits at the empty subset.
class GrassmannElement {
 public:
  GrassmannElement() = default;
  explicit GrassmannElement(int generators);
  GrassmannElement(int generators, Vector amplitudes);

  static GrassmannElement unit(int generators);
  /// The generator kappa_m, 1 <= m <= G.
  static GrassmannElement generator(int generators, int m);
  static GrassmannElement monomial(int generators, ModeSubset k);

  int generators() const { return generators_; }
  const Vector& amplitudes() const { return amps_; }
  Vector& amplitudes() { return amps_; }
  Complex operator[](ModeSubset k) const { return amps_[k.bits]; }
  Complex& operator[](ModeSubset k) { return amps_[k.bits]; }

  GrassmannElement degree(int p) const;
  GrassmannElement even_part() const;
  GrassmannElement odd_part() const;

  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  GrassmannElement& operator*=(Complex s);
  GrassmannElement operator-() const;

 private:
  int generators_ = 0;
  Vector amps_;
};

GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b);
GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b);
GrassmannElement operator*(Complex s, GrassmannElement a);
/// Grassmann product.
GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);

GrassmannElement gproduct(const GrassmannElement& a, const GrassmannElement& b);
Real gnorm(const GrassmannElement& a);
/// Antilinear involution with kappa_m* = kappa_m and (ab)* = b* a*.
GrassmannElement gstar(const GrassmannElement& a);
/// Parity of the support; the zero element counts as even.
Parity gparity(const GrassmannElement& a, Real tol = 0.0);
/// exp of a pure degree-2 element as a terminating series.
GrassmannElement gexp(const GrassmannElement& a, Real tol = 1e-14);
/// Largest degree carrying an amplitude above tol, or -1 for zero.
int top_degree(const GrassmannElement& a, Real tol = 0.0);

/// Matrix of left multiplication by a on the 2^G amplitude space.
Matrix left_multiplication(const GrassmannElement& a);

inline Real inverse_factorial_sq(int p) {
  Real f = 1.0;
  for (int k = 2; k <= p; ++k) f *= k;
  return 1.0 / (f * f);
}

}  // namespace superfock

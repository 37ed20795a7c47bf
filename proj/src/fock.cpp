// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#include "superfock/fock.hpp"

#include <utility>

namespace superfock {

namespace {

void check_modes(int modes) {
  if (modes < 0 || modes > kMaxIndices)
    throw DimensionError("mode count out of range: " + std::to_string(modes));
}

}  // namespace

FockVector::FockVector(int modes) : modes_(modes) {
  check_modes(modes);
  amps_ = Vector::Zero(fock_dim(modes));
}

FockVector::FockVector(int modes, Vector amplitudes) : modes_(modes), amps_(std::move(amplitudes)) {
  check_modes(modes);
  require_dims(amps_.size() == fock_dim(modes), "FockVector: amplitude count is not 2^d");
}

FockVector FockVector::vacuum(int modes) { return basis(modes, ModeSubset{}); }

FockVector FockVector::basis(int modes, ModeSubset a) {
  FockVector v(modes);
  require_dims(a.bits <= full_set(modes), "FockVector::basis: subset exceeds mode range");
  v.amps_[a.bits] = 1.0;
  return v;
}

FockVector FockVector::one_particle(const Vector& f) {
  const int d = int(f.size());
  FockVector v(d);
  for (int k = 0; k < d; ++k) v.amps_[Bits(1) << k] = f[k];
  return v;
}

FockVector FockVector::degree(int p) const {
  FockVector out(modes_);
  for (Eigen::Index a = 0; a < amps_.size(); ++a)
    if (popcount(Bits(a)) == p) out.amps_[a] = amps_[a];
  return out;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  require_dims(o.modes_ == modes_, "FockVector: mode mismatch");
  amps_ += o.amps_;
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  require_dims(o.modes_ == modes_, "FockVector: mode mismatch");
  amps_ -= o.amps_;
  return *this;
}

FockVector& FockVector::operator*=(Complex s) {
  amps_ *= s;
  return *this;
}

FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
FockVector operator*(Complex s, FockVector a) { return a *= s; }

FockVector wedge(const FockVector& f, const FockVector& g) {
  require_dims(f.modes() == g.modes(), "wedge: mode mismatch");
  return FockVector(f.modes(), exterior_product(f.amplitudes(), g.amplitudes(), f.modes()));
}

FockVector star(const FockVector& f) { return FockVector(f.modes(), reversed_conjugate(f.amplitudes())); }

Complex inner(const FockVector& f, const FockVector& g) {
  require_dims(f.modes() == g.modes(), "inner: mode mismatch");
  return f.amplitudes().dot(g.amplitudes());
}

Complex bilinear(const FockVector& f, const FockVector& g) { return inner(star(f), g); }

Vector wedge_vector(const Vector& f, const Vector& amps, int modes) {
  Vector out = Vector::Zero(amps.size());
  const Bits full = full_set(modes);
  for (Bits a = 0; a <= full; ++a) {
    if (amps[a] == Complex(0)) continue;
    for (int k = 0; k < modes; ++k) {
      const Bits bit = Bits(1) << k;
      if (a & bit) continue;
      out[a | bit] += Real(wedge_sign(bit, a)) * f[k] * amps[a];
    }
  }
  return out;
}

Vector wedge_columns(const Matrix& w, Bits l) {
  const int d = int(w.rows());
  Vector out = Vector::Zero(fock_dim(d));
  out[0] = 1.0;
  // Build from the highest column down so each step is a left wedge.
  for (int k = int(w.cols()) - 1; k >= 0; --k)
    if ((l >> k) & 1u) out = wedge_vector(w.col(k), out, d);
  return out;
}

FockOperator create(const Vector& f) {
  const int d = int(f.size());
  check_modes(d);
  const Bits full = full_set(d);
  FockOperator a = FockOperator::Zero(fock_dim(d), fock_dim(d));
  for (Bits s = 0; s <= full; ++s)
    for (int k = 0; k < d; ++k) {
      const Bits bit = Bits(1) << k;
      if (s & bit) continue;
      a(s | bit, s) += Real(wedge_sign(bit, s)) * f[k];
    }
  return a;
}

FockOperator annihilate(const Vector& f) { return create(f).adjoint(); }

FockOperator delta(const Vector& f) {
  FockOperator c = create(f);
  return c - c.adjoint();
}

FockOperator gamma(const Matrix& b) {
  require_dims(b.rows() == b.cols(), "gamma: matrix must be square");
  const int d = int(b.rows());
  check_modes(d);
  const Bits full = full_set(d);
  FockOperator g(fock_dim(d), fock_dim(d));
  g.col(0) = FockVector::vacuum(d).amplitudes();
  for (Bits a = 1; a <= full; ++a) {
    const int low = std::countr_zero(a);
    g.col(a) = wedge_vector(b.col(low), g.col(a & (a - 1)), d);
  }
  return g;
}

FockOperator parity_operator(int modes) {
  check_modes(modes);
  Vector diag(fock_dim(modes));
  for (Eigen::Index a = 0; a < diag.size(); ++a) diag[a] = (popcount(Bits(a)) & 1) ? -1.0 : 1.0;
  return diag.asDiagonal();
}

}  // namespace superfock

// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#include "superfock/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace superfock {

namespace {

void check_generators(int g) {
  if (g < 0 || g > kMaxIndices)
    throw DimensionError("generator count out of range: " + std::to_string(g));
}

}  // namespace

GrassmannElement::GrassmannElement(int generators) : generators_(generators) {
  check_generators(generators);
  amps_ = Vector::Zero(Eigen::Index(1) << generators);
}

GrassmannElement::GrassmannElement(int generators, Vector amplitudes)
    : generators_(generators), amps_(std::move(amplitudes)) {
  check_generators(generators);
  require_dims(amps_.size() == (Eigen::Index(1) << generators), "GrassmannElement: amplitude count is not 2^G");
}

GrassmannElement GrassmannElement::unit(int generators) { return monomial(generators, ModeSubset{}); }

GrassmannElement GrassmannElement::generator(int generators, int m) {
  require_dims(m >= 1 && m <= generators, "GrassmannElement::generator: index out of range");
  return monomial(generators, ModeSubset{m});
}

GrassmannElement GrassmannElement::monomial(int generators, ModeSubset k) {
  GrassmannElement g(generators);
  require_dims(k.bits <= full_set(generators), "GrassmannElement::monomial: subset exceeds generator range");
  g.amps_[k.bits] = 1.0;
  return g;
}

GrassmannElement GrassmannElement::degree(int p) const {
  GrassmannElement out(generators_);
  for (Eigen::Index a = 0; a < amps_.size(); ++a)
    if (popcount(Bits(a)) == p) out.amps_[a] = amps_[a];
  return out;
}

GrassmannElement GrassmannElement::even_part() const {
  GrassmannElement out(generators_);
  for (Eigen::Index a = 0; a < amps_.size(); ++a)
    if (popcount(Bits(a)) % 2 == 0) out.amps_[a] = amps_[a];
  return out;
}

GrassmannElement GrassmannElement::odd_part() const { return *this - even_part(); }

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  require_dims(o.generators_ == generators_, "GrassmannElement: generator mismatch");
  amps_ += o.amps_;
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  require_dims(o.generators_ == generators_, "GrassmannElement: generator mismatch");
  amps_ -= o.amps_;
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(Complex s) {
  amps_ *= s;
  return *this;
}

GrassmannElement GrassmannElement::operator-() const { return Complex(-1.0) * *this; }

GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
GrassmannElement operator*(Complex s, GrassmannElement a) { return a *= s; }

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) { return gproduct(a, b); }

GrassmannElement gproduct(const GrassmannElement& a, const GrassmannElement& b) {
  require_dims(a.generators() == b.generators(), "gproduct: generator mismatch");
  return GrassmannElement(a.generators(), exterior_product(a.amplitudes(), b.amplitudes(), a.generators()));
}

Real gnorm(const GrassmannElement& a) {
  Real s = 0.0;
  for (Eigen::Index k = 0; k < a.amplitudes().size(); ++k)
    s += inverse_factorial_sq(popcount(Bits(k))) * std::norm(a.amplitudes()[k]);
  return std::sqrt(s);
}

GrassmannElement gstar(const GrassmannElement& a) {
  return GrassmannElement(a.generators(), reversed_conjugate(a.amplitudes()));
}

Parity gparity(const GrassmannElement& a, Real tol) {
  bool even = false, odd = false;
  for (Eigen::Index k = 0; k < a.amplitudes().size(); ++k) {
    if (std::abs(a.amplitudes()[k]) <= tol) continue;
    (popcount(Bits(k)) % 2 ? odd : even) = true;
  }
  if (even && odd) return Parity::mixed;
  return odd ? Parity::odd : Parity::even;
}

int top_degree(const GrassmannElement& a, Real tol) {
  int top = -1;
  for (Eigen::Index k = 0; k < a.amplitudes().size(); ++k)
    if (std::abs(a.amplitudes()[k]) > tol) top = std::max(top, popcount(Bits(k)));
  return top;
}

GrassmannElement gexp(const GrassmannElement& a, Real tol) {
  if ((a - a.degree(2)).amplitudes().cwiseAbs().maxCoeff() > tol * (1.0 + a.amplitudes().cwiseAbs().maxCoeff()))
    throw ValidationError("gexp: argument is not of pure degree 2");
  const GrassmannElement x = a.degree(2);
  GrassmannElement term = GrassmannElement::unit(a.generators());
  GrassmannElement sum = term;
  for (int p = 1; 2 * p <= a.generators(); ++p) {
    term = Complex(1.0 / p) * (term * x);
    sum += term;
  }
  return sum;
}

Matrix left_multiplication(const GrassmannElement& a) {
  const int g = a.generators();
  const Bits full = full_set(g);
  Matrix m = Matrix::Zero(a.amplitudes().size(), a.amplitudes().size());
  for (Bits q = 0; q <= full; ++q) {
    const Complex aq = a.amplitudes()[q];
    if (aq == Complex(0)) continue;
    const Bits comp = full ^ q;
    for (Bits p = comp;; p = (p - 1) & comp) {
      m(q | p, p) += Real(wedge_sign(q, p)) * aq;
      if (p == 0) break;
    }
  }
  return m;
}

}  // namespace superfock

// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "support/testing.hpp"

using namespace superfock;
using namespace superfock::testing;

namespace {

constexpr int kG = 3, kD = 3;

Real gdiff(const GrassmannElement& a, const GrassmannElement& b) { return max_abs((a - b).amplitudes()); }
Real mdiff(const ModuleTensor& a, const ModuleTensor& b) { return max_abs((a - b).amplitudes()); }

Matrix lambda_scalar(const GrassmannElement& mu, int d) { return RegularOperator::scalar(mu, d).materialize(); }

ModuleTensor restrict_modes(ModuleTensor t, Bits allowed) {
  for (Eigen::Index a = 0; a < t.amplitudes().cols(); ++a)
    if (Bits(a) & ~allowed) t.amplitudes().col(a).setZero();
  return t;
}

ModuleTensor parity_part(const ModuleTensor& t, int par) {
  ModuleTensor out(t.generators(), t.modes());
  for (int p = 0; p <= t.generators(); ++p)
    for (int n = 0; n <= t.modes(); ++n)
      if (((p + n) & 1) == par) out += t.bidegree(p, n);
  return out;
}

Matrix diag(std::initializer_list<double> v) {
  Vector x(Eigen::Index(v.size()));
  Eigen::Index k = 0;
  for (double e : v) x[k++] = e;
  return x.asDiagonal();
}

}  // namespace

TEST_CASE("symplectic form") {
  Rng rng(163);
  for (int rep = 0; rep < 20; ++rep) {
    const auto xi = random_supervector(rng, kG, kD), eta = random_supervector(rng, kG, kD);
    CHECK(max_abs(omega_form(xi, xi).amplitudes()) < 1e-15);
    CHECK(gdiff(omega_form(xi, eta), Complex(-1.0) * omega_form(eta, xi)) < 1e-15);
    CHECK(gparity(omega_form(xi, eta)) != Parity::odd);
    const auto r = random_invertible(rng, kD);
    CHECK(gdiff(omega_form(act(r, xi), act(r, eta)), omega_form(xi, eta)) < 1e-12);
    const auto zeta = random_supervector(rng, kG, kD);
    CHECK(gdiff(omega_form(xi + zeta, eta), omega_form(xi, eta) + omega_form(zeta, eta)) < 1e-13);
  }
}

TEST_CASE("realizations agree") {
  const auto w0 = weyl(SuperVector::zero(kG, kD));
  const Eigen::Index n = Eigen::Index(1) << (kG + kD);
  CHECK(max_abs(w0.dense() - Matrix::Identity(n, n)) == 0.0);
  CHECK(max_abs(w0.normal_ordered().materialize() - Matrix::Identity(n, n)) == 0.0);
  Rng rng(167);
  for (int rep = 0; rep < 10; ++rep) {
    const auto eta = random_supervector(rng, kG, kD);
    const auto w = weyl(eta);
    CHECK(max_abs(w.dense() - w.normal_ordered().materialize()) < 1e-9);
    // Superadjoint and inverse are both W(-eta).
    const Matrix minus = weyl(-eta).dense();
    CHECK(max_abs(superadjoint(w.normal_ordered()).materialize() - minus) < 1e-10);
    CHECK(max_abs(minus * w.dense() - Matrix::Identity(n, n)) < 1e-10);
  }
}

TEST_CASE("action on coherent vectors") {
  Rng rng(173);
  for (int rep = 0; rep < 50; ++rep) {
    const auto eta = random_supervector(rng, kG, kD), xi = random_supervector(rng, kG, kD);
    const auto phase = gexp(Complex(-1.0) * lambda_inner(eta, xi) + Complex(-0.5) * lambda_inner(eta, eta));
    const auto want = phase * coherent(eta + xi);
    CHECK(mdiff(weyl(eta).apply(coherent(xi)), want) < 1e-10);
  }
}

TEST_CASE("group law") {
  Rng rng(179);
  for (int rep = 0; rep < 10; ++rep) {
    const auto xi = random_supervector(rng, kG, kD), eta = random_supervector(rng, kG, kD);
    const auto phase = gexp(Complex(0.0, -1.0) * omega_form(xi, eta));
    const Matrix lhs = weyl(xi).dense() * weyl(eta).dense();
    const Matrix rhs = lambda_scalar(phase, kD) * weyl(xi + eta).dense();
    CHECK(max_abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("isometry of the lambda inner product") {
  Rng rng(181);
  for (int rep = 0; rep < 20; ++rep) {
    const auto eta = random_supervector(rng, kG, kD);
    const auto x = random_module(rng, kG, kD), y = random_module(rng, kG, kD);
    const auto w = weyl(eta);
    CHECK(gdiff(lambda_inner(w.apply(x), w.apply(y)), lambda_inner(x, y)) < 1e-10);
  }
}

TEST_CASE("generator by finite differences") {
  Rng rng(191);
  const Real h = 1e-5;
  for (int rep = 0; rep < 10; ++rep) {
    const auto eta = random_supervector(rng, kG, kD), xi = random_supervector(rng, kG, kD);
    const auto e = coherent(xi);
    const auto fd = Complex(1.0 / (2 * h)) * (weyl(h * eta).apply(e) - weyl(-h * eta).apply(e));
    CHECK(mdiff(fd, weyl_generator(eta).apply(e)) < 1e-7);
  }
}

TEST_CASE("action on ultracoherent vectors") {
  Rng rng(193);
  const auto x0 = random_skew(rng, kD, 0.6);
  const auto xi0 = random_supervector(rng, kG, kD);
  CHECK(mdiff(weyl_on_ultracoherent(SuperVector::zero(kG, kD), x0, xi0), ultracoherent(x0, xi0)) < 1e-15);
  for (int rep = 0; rep < 20; ++rep) {
    const auto eta = random_supervector(rng, kG, kD), xi = random_supervector(rng, kG, kD);
    const auto x = random_skew(rng, kD, 0.6);
    const Vector direct = weyl(eta).dense() * ultracoherent(x, xi).flat();
    CHECK(max_abs(weyl_on_ultracoherent(eta, x, xi).flat() - direct) < 1e-9);
  }
  CHECK_THROWS_AS(weyl_on_ultracoherent(xi0, SkewMatrix::zero(2), xi0), DimensionError);
}

TEST_CASE("restriction to an invariant subspace") {
  Rng rng(197);
  const auto eta0 = random_supervector(rng, kG, kD);
  const Matrix id = Matrix::Identity(kD, kD);
  CHECK(weyl_restricted_residual(id, id, eta0) < 1e-12);
  for (int rep = 0; rep < 5; ++rep) {
    // Full-space unitary.
    const Matrix s = random_unitary(rng, kD);
    CHECK(weyl_restricted_residual(s, id, random_supervector(rng, kG, kD)) < 1e-10);
    // Two-dimensional F inside d = 3.
    const Matrix q = random_unitary(rng, kD);
    const Matrix p = q * diag({1, 1, 0}) * q.adjoint();
    Matrix blk = Matrix::Identity(kD, kD);
    blk.topLeftCorner(2, 2) = random_unitary(rng, 2);
    blk(2, 2) = 0.0;
    const Matrix sf = q * blk * q.adjoint();
    const auto eta = random_supervector(rng, kG, kD).apply(p);
    CHECK(weyl_restricted_residual(sf, p, eta) < 1e-10);
  }
  CHECK_THROWS_AS(weyl_restricted_residual(id, 2.0 * id, eta0), ValidationError);
  CHECK_THROWS_AS(weyl_restricted_residual(id, diag({1, 0, 0}), eta0), ValidationError);
}

TEST_CASE("factorization over orthogonal subspaces") {
  Rng rng(199);
  const Matrix p1 = diag({1, 0, 0}), p2 = diag({0, 1, 1});
  for (int rep = 0; rep < 20; ++rep) {
    const auto eta = random_supervector(rng, kG, kD);
    const int k = rep % 2;
    const auto xi1 = parity_part(restrict_modes(random_module(rng, kG, kD), 0b001), k);
    const auto xi2 = restrict_modes(random_module(rng, kG, kD), 0b110);
    const auto lhs = weyl(eta).apply(mproduct(xi1, xi2));
    CHECK(mdiff(weyl_factorize(eta, p1, p2, xi1, xi2), lhs) < 1e-10);
  }
  // Vacuum first factor and eta on one subspace only.
  const auto eta = random_supervector(rng, kG, kD).apply(p2);
  const auto xi2 = restrict_modes(random_module(rng, kG, kD), 0b110);
  const auto vac = ModuleTensor::vacuum(kG, kD);
  CHECK(mdiff(weyl_factorize(eta, p1, p2, vac, xi2), weyl(eta).apply(xi2)) < 1e-10);
  const auto mixed = vac + restrict_modes(random_module(rng, kG, kD), 0b001);
  CHECK_THROWS_AS(weyl_factorize(eta, p1, p2, mixed, xi2), ValidationError);
}

// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "support/testing.hpp"

using namespace superfock;
using namespace superfock::testing;

namespace {

Real gdiff(const GrassmannElement& a, const GrassmannElement& b) { return max_abs((a - b).amplitudes()); }
Real mdiff(const ModuleTensor& a, const ModuleTensor& b) { return max_abs((a - b).amplitudes()); }

ModuleTensor basis_tensor(int g, int d, Bits p, Bits a) {
  ModuleTensor t(g, d);
  t.amplitudes()(p, a) = 1.0;
  return t;
}

// Random tensor supported on Lambda_p (x) A_n.
ModuleTensor random_bidegree(Rng& rng, int g, int d, int p, int n) { return random_module(rng, g, d).bidegree(p, n); }

}  // namespace

TEST_CASE("module product unit and basis rule") {
  Rng rng(73);
  const auto x = random_module(rng, 3, 3);
  CHECK(mdiff(mproduct(ModuleTensor::vacuum(3, 3), x), x) == 0.0);
  CHECK(mdiff(mproduct(x, ModuleTensor::vacuum(3, 3)), x) == 0.0);
  const auto l = random_grassmann(rng, 3), m = random_grassmann(rng, 3);
  const auto f = random_fock(rng, 3), h = random_fock(rng, 3);
  CHECK(mdiff(mproduct(ModuleTensor::product(l, f), ModuleTensor::product(m, h)), ModuleTensor::product(l * m, wedge(f, h))) <
        1e-12);
  CHECK_THROWS_AS(mproduct(x, ModuleTensor::vacuum(2, 3)), DimensionError);
}

TEST_CASE("module product bigraded commutation, exhaustive G = d = 3") {
  const int g = 3, d = 3;
  int odd_odd_anticommute = 0, odd_odd_total = 0;
  for (Bits p = 0; p < 8; ++p)
    for (Bits a = 0; a < 8; ++a)
      for (Bits q = 0; q < 8; ++q)
        for (Bits b = 0; b < 8; ++b) {
          const auto x = basis_tensor(g, d, p, a), y = basis_tensor(g, d, q, b);
          const auto xy = mproduct(x, y), yx = mproduct(y, x);
          const int sp = popcount(p), sa = popcount(a), sq = popcount(q), sb = popcount(b);
          const Real sign = ((sp * sq + sa * sb) & 1) ? -1.0 : 1.0;
          CHECK(mdiff(xy, sign * yx) == 0.0);
          const int px = (sp + sa) & 1, py = (sq + sb) & 1;
          if (!px && !py) CHECK(mdiff(xy, yx) == 0.0);
          // Pure Fock or pure Lambda odd elements anticommute.
          if (px && py && ((sp == 0 && sq == 0) || (sa == 0 && sb == 0))) CHECK(mdiff(xy, -1.0 * yx) == 0.0);
          if (px && py && max_abs(xy.amplitudes()) > 0) {
            ++odd_odd_total;
            odd_odd_anticommute += mdiff(xy, -1.0 * yx) == 0.0;
          }
        }
  // Mixed odd-odd pairs commute, so the naive total-parity rule does not hold in general.
  CHECK(odd_odd_anticommute < odd_odd_total);
}

TEST_CASE("module norms") {
  Rng rng(79);
  CHECK(module_norm(ModuleTensor::vacuum(2, 2)) == 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    const auto x = random_module(rng, 3, 3);
    CHECK(weighted_norm(x, 0.0) == doctest::Approx(module_norm(x)));
    CHECK(weighted_norm(x, 1.0) >= module_norm(x));
    CHECK(weighted_norm(x, 2.0) >= weighted_norm(x, 1.0));
    const auto xi = random_supervector(rng, 3, 3);
    CHECK(module_norm(xi.embed()) == doctest::Approx(xi.norm()));
    CHECK(module_norm(mproduct(xi.embed(), x)) <= xi.norm() * module_norm(x) * (1 + 1e-12));
  }
  CHECK_THROWS_AS(weighted_norm(ModuleTensor::vacuum(1, 1), -1.0), ValidationError);
}

TEST_CASE("product bound on homogeneous slices") {
  Rng rng(83);
  const int g = 4, d = 4;
  std::uniform_int_distribution<int> deg(0, d);
  for (int rep = 0; rep < 200; ++rep) {
    const int p = deg(rng), q = deg(rng);
    const auto x = random_module(rng, g, d).fock_degree(p), y = random_module(rng, g, d).fock_degree(q);
    const Real c = std::sqrt(3.0 * factorial(p + q) / (factorial(p) * factorial(q)));
    CHECK(module_norm(mproduct(x, y)) <= c * module_norm(x) * module_norm(y) * (1 + 1e-12));
  }
}

TEST_CASE("lambda inner product") {
  const int g = 3, d = 3;
  const auto vac = ModuleTensor::vacuum(g, d);
  CHECK(gdiff(lambda_inner(vac, vac), GrassmannElement::unit(g)) == 0.0);
  Rng rng(89);
  for (int rep = 0; rep < 30; ++rep) {
    const auto l = random_grassmann(rng, g), m = random_grassmann(rng, g);
    const auto f = random_fock(rng, d), h = random_fock(rng, d);
    const auto want = inner(f, h) * (gstar(l) * m);
    CHECK(gdiff(lambda_inner(ModuleTensor::product(l, f), ModuleTensor::product(m, h)), want) < 1e-12);
    const auto x = random_module(rng, g, d), y = random_module(rng, g, d);
    CHECK(gdiff(gstar(lambda_inner(x, y)), lambda_inner(y, x)) < 1e-12);
    CHECK(gnorm(lambda_inner(x, y)) <= std::sqrt(3.0) * module_norm(x) * module_norm(y));
    // Supervector pairing agrees with the embedded tensors.
    const auto xi = random_supervector(rng, g, d), eta = random_supervector(rng, g, d);
    CHECK(gdiff(lambda_inner(xi, eta), lambda_inner(xi.embed(), eta.embed())) < 1e-12);
    CHECK(gdiff(lambda_bilinear(xi, eta), lambda_inner(xi.star(), eta)) < 1e-12);
  }
}

TEST_CASE("factorization over orthogonal mode subspaces") {
  // Modes {1,2} carry the first factors, {3} the second.
  const int g = 4, d = 3;
  Rng rng(97);
  for (int rep = 0; rep < 40; ++rep) {
    const int k = rep % 2;
    auto restrict = [&](ModuleTensor t, Bits allowed) {
      for (Bits a = 0; a < 8; ++a)
        if (a & ~allowed) t.amplitudes().col(a).setZero();
      return t;
    };
    auto with_parity = [&](const ModuleTensor& t, int par) {
      ModuleTensor out(g, d);
      for (int p = 0; p <= g; ++p)
        for (int n = 0; n <= d; ++n)
          if (((p + n) & 1) == par) out += t.bidegree(p, n);
      return out;
    };
    const auto t1 = with_parity(restrict(random_module(rng, g, d), 0b011), k);
    const auto x1 = with_parity(restrict(random_module(rng, g, d), 0b011), k);
    const auto t2 = restrict(random_module(rng, g, d), 0b100), x2 = restrict(random_module(rng, g, d), 0b100);
    const auto lhs = lambda_inner(mproduct(t1, t2), mproduct(x1, x2));
    CHECK(gdiff(lhs, lambda_inner(t1, x1) * lambda_inner(t2, x2)) < 1e-11);
  }
}

TEST_CASE("coherent vectors") {
  const int g = 3, d = 3;
  CHECK(mdiff(coherent(SuperVector::zero(g, d)), ModuleTensor::vacuum(g, d)) == 0.0);
  const auto k1e1 = SuperVector::term(g, 1, Vector::Unit(d, 0));
  CHECK(mdiff(coherent(k1e1), ModuleTensor::vacuum(g, d) + k1e1.embed()) == 0.0);
  const auto c1 = coherent(k1e1);
  CHECK(gdiff(lambda_inner(c1, c1), GrassmannElement::unit(g)) < 1e-15);
  Rng rng(101);
  for (int rep = 0; rep < 30; ++rep) {
    const auto xi = random_supervector(rng, g, d), eta = random_supervector(rng, g, d);
    CHECK(mdiff(coherent(xi), coherent_closed_form(xi)) < 1e-12);
    CHECK(mdiff(mproduct(coherent(xi), coherent(eta)), coherent(xi + eta)) < 1e-11);
    CHECK(gdiff(lambda_inner(coherent(xi), coherent(eta)), gexp(lambda_inner(xi, eta))) < 1e-11);
    CHECK(coherent(xi).parity(1e-14) == Parity::even);
  }
}

TEST_CASE("coherent pairing is multiplicative on even tensors") {
  const int g = 3, d = 3;
  Rng rng(103);
  auto even = [&](const ModuleTensor& t) {
    ModuleTensor out(g, d);
    for (int p = 0; p <= g; ++p)
      for (int n = 0; n <= d; ++n)
        if (!((p + n) & 1)) out += t.bidegree(p, n);
    return out;
  };
  for (int rep = 0; rep < 30; ++rep) {
    const auto xi = random_supervector(rng, g, d);
    const auto a = even(random_module(rng, g, d)), b = even(random_module(rng, g, d));
    const auto e = coherent(xi);
    CHECK(gdiff(lambda_inner(e, mproduct(a, b)), lambda_inner(e, a) * lambda_inner(e, b)) < 1e-10);
  }
}

TEST_CASE("ultracoherent vectors") {
  const int g = 3, d = 3;
  CHECK(mdiff(ultracoherent(SkewMatrix::zero(d), SuperVector::zero(g, d)), ModuleTensor::vacuum(g, d)) == 0.0);
  Rng rng(107);
  for (int rep = 0; rep < 30; ++rep) {
    const auto x = random_skew(rng, d, 0.6);
    const auto xi = random_supervector(rng, g, d), eta = random_supervector(rng, g, d);
    const auto psi = ultracoherent(x, eta);
    CHECK(psi.parity(1e-14) == Parity::even);
    const auto gauss = ModuleTensor::product(GrassmannElement::unit(g), exp_omega(x));
    CHECK(mdiff(psi, mproduct(gauss, coherent(eta))) < 1e-12);

    // Pairing with a coherent vector.
    const auto arg = lambda_inner(xi, eta + Complex(0.5) * xi.star().apply(x.matrix()));
    CHECK(gdiff(lambda_inner(coherent(xi), psi), gexp(arg)) < 1e-10);

    // Self pairing.
    const Matrix& xm = x.matrix();
    const Matrix id = Matrix::Identity(d, d);
    const Matrix am = xm * (id + xm.adjoint() * xm).inverse();
    const Matrix bm = (id + xm * xm.adjoint()).inverse();
    const auto xs = xi.star();
    const auto expo = Complex(0.5) * lambda_bilinear(xs, xs.apply(am)) + lambda_bilinear(xs, xi.apply(bm)) +
                      Complex(0.5) * lambda_bilinear(xi, xi.apply(am.adjoint()));
    const Real sq = std::sqrt((id + xm.adjoint() * xm).determinant().real());
    const auto psi_x = ultracoherent(x, xi);
    CHECK(gdiff(lambda_inner(psi_x, psi_x), sq * gexp(expo)) < 1e-10);
  }
  CHECK_THROWS_AS(ultracoherent(SkewMatrix::zero(2), SuperVector::zero(g, d)), DimensionError);
}

TEST_CASE("creation and annihilation") {
  const int g = 3, d = 3;
  Rng rng(109);
  const auto vac = ModuleTensor::vacuum(g, d);
  for (int rep = 0; rep < 20; ++rep) {
    const auto eta = random_supervector(rng, g, d), xi = random_supervector(rng, g, d);
    CHECK(mdiff(b_plus(eta).apply(vac), eta.embed()) < 1e-15);
    CHECK(max_abs(b_minus(eta).apply(vac).amplitudes()) < 1e-15);
    const auto x = random_module(rng, g, d);
    CHECK(mdiff(b_plus(eta).apply(x), mproduct(eta.embed(), x)) < 1e-12);
    const auto e = coherent(xi);
    CHECK(mdiff(b_plus(eta).apply(e), mproduct(eta.embed(), e)) < 1e-12);
    CHECK(mdiff(b_minus(eta).apply(e), lambda_inner(eta, xi) * e) < 1e-11);
    CHECK(module_norm(b_plus(eta).apply(x)) <= eta.norm() * module_norm(x) * (1 + 1e-12));
  }
}

TEST_CASE("regular operators and superadjoint") {
  const int g = 3, d = 2;
  Rng rng(113);
  const auto id = RegularOperator::identity(g, d);
  const auto x = random_module(rng, g, d);
  CHECK(mdiff(id.apply(x), x) == 0.0);
  CHECK(max_abs(superadjoint(id).materialize() - id.materialize()) == 0.0);
  const Matrix t = random_matrix(rng, 4, 4);
  RegularOperator k1(g, d);
  k1.add_term(GrassmannElement::generator(g, 1), t);
  const auto k1a = superadjoint(k1);
  REQUIRE(k1a.terms().size() == 1);
  CHECK(gdiff(k1a.terms()[0].coeff, GrassmannElement::generator(g, 1)) == 0.0);
  CHECK(max_abs(k1a.terms()[0].op - t.adjoint()) == 0.0);
  for (int rep = 0; rep < 20; ++rep) {
    RegularOperator r(g, d);
    for (int k = 0; k < 3; ++k) r.add_term(random_grassmann(rng, g), random_matrix(rng, 4, 4));
    const auto th = random_module(rng, g, d), xi = random_module(rng, g, d);
    CHECK(gdiff(lambda_inner(th, r.apply(xi)), lambda_inner(superadjoint(r).apply(th), xi)) < 1e-11);
    // Dense form, application and composition agree.
    CHECK(max_abs(r.materialize() * xi.flat() - r.apply(xi).flat()) < 1e-11);
    RegularOperator s(g, d);
    s.add_term(random_grassmann(rng, g), random_matrix(rng, 4, 4));
    CHECK(max_abs((r * s).materialize() - r.materialize() * s.materialize()) < 1e-10);
    CHECK(max_abs(r.canonical().materialize() - r.materialize()) < 1e-12);
  }
}

TEST_CASE("separating family") {
  CHECK(separating_family(1, 1).size() == 3);
  CHECK(separating_family(2, 2).size() == 81);
  // kappa_[G] (x) e_A with A nonempty pairs to zero with every coherent vector.
  const int g = 2, d = 2;
  const auto top = ModuleTensor::product(GrassmannElement::monomial(g, ModeSubset{1, 2}), FockVector::basis(d, {1}));
  for (const auto& zeta : separating_family(g, d))
    CHECK(max_abs(lambda_inner(coherent(zeta), top).amplitudes()) == 0.0);
  // So the pairing rank stays below 4^d; the kernel contains at least 2^d - 1 directions.
  for (int n = 1; n <= 2; ++n) {
    const int r = separating_rank(n, n);
    CHECK(r <= (1 << (2 * n)) - ((1 << n) - 1));
    CHECK(r > 0);
  }
  CHECK(regular_annihilator_dim(1, 1) > 0);
}

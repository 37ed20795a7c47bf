// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <functional>

#include "cli.hpp"
#include "superfock/bogoliubov.hpp"
#include "superfock/sampling.hpp"
#include "superfock/weyl.hpp"

namespace superfock::cli {

namespace {

constexpr int kMaxModuleModes = 6;

Real rel(const Matrix& a, const Matrix& b) { return max_abs(a - b) / std::max(1.0, max_abs(b)); }
Real rel(const ModuleTensor& a, const ModuleTensor& b) { return rel(a.amplitudes(), b.amplitudes()); }
Real rel(const GrassmannElement& a, const GrassmannElement& b) { return rel(a.amplitudes(), b.amplitudes()); }

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

Matrix coordinate_projector(int d, Bits modes) {
  Matrix p = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k)
    if ((modes >> k) & 1u) p(k, k) = 1.0;
  return p;
}

class Battery {
 public:
  Battery(Real tol, json& report) : tol_(tol), report_(report) {}

  void run(const std::string& name, const std::function<Real()>& f) {
    Real r = 0.0;
    try {
      r = f();
    } catch (const std::exception& e) {
      report_["warnings"].push_back(name + ": " + e.what());
      r = std::numeric_limits<Real>::infinity();
    }
    const bool pass = std::isfinite(r) && r <= tol_;
    report_["residuals"][name] = std::isfinite(r) ? json(r) : json("inf");
    report_["checks"][name] = pass ? "pass" : "fail";
    ok_ = ok_ && pass;
  }

  bool ok() const { return ok_; }

 private:
  Real tol_;
  json& report_;
  bool ok_ = true;
};

}  // namespace

bool selftest(const SelftestConfig& cfg, json& report) {
  const int d = cfg.modes, g = cfg.generators;
  Rng rng(cfg.seed);
  report["checks"] = json::object();
  Battery b(cfg.tol, report);

  b.run("car", [&] {
    Real worst = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Matrix ai = create(Vector::Unit(d, i)), aj = create(Vector::Unit(d, j));
        const Matrix id = Matrix::Identity(ai.rows(), ai.cols());
        worst = std::max(worst, max_abs(ai.adjoint() * aj + aj * ai.adjoint() - (i == j ? id : Matrix(0 * id))));
        worst = std::max(worst, max_abs(ai * aj + aj * ai));
      }
    return worst;
  });

  b.run("pfaffian_det", [&] {
    Real worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
      const SkewMatrix x = random_skew(rng, d), y = random_skew(rng, d);
      const Complex ov = overlap_det(x, y);
      const Complex det = (Matrix::Identity(d, d) + x.matrix().adjoint() * y.matrix()).determinant();
      worst = std::max(worst, std::abs(ov * ov - det) / std::max(1.0, std::abs(det)));
    }
    return worst;
  });

  b.run("gaussian_norm", [&] {
    Real worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
      const GaussianNorms n = gaussian_norms(random_skew(rng, d));
      worst = std::max({worst, std::abs(n.subset_sum - n.sqrt_det) / n.sqrt_det,
                        std::abs(n.subset_sum - n.pair_product) / n.sqrt_det});
    }
    return worst;
  });

  b.run("implementer_invertible", [&] {
    Real worst = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
      const OrthogonalTransform r = random_invertible(rng, d);
      const Matrix t = implement_general(r).t;
      worst = std::max({worst, unitarity_residual(t), intertwining_residual(r, t)});
    }
    return worst;
  });

  b.run("implementer_singular", [&] {
    Real worst = 0.0;
    for (int n = 1; n <= std::min(d, 2); ++n) {
      const OrthogonalTransform r = engineered_singular(rng, d, n);
      const Matrix t = implement_general(r).t;
      worst = std::max({worst, unitarity_residual(t), intertwining_residual(r, t)});
    }
    return worst;
  });

  b.run("right_unitary_covariance", [&] {
    const OrthogonalTransform r = engineered_singular(rng, d, 1);
    const Matrix s = random_unitary(rng, d);
    const auto rs = OrthogonalTransform::unchecked(r.U() * s, r.V() * s.conjugate());
    return max_abs(implement_general(r).t * gamma(s) - implement_general(rs).t);
  });

  b.run("orbit_transform", [&] {
    Real worst = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
      const OrthogonalTransform r2 = random_invertible(rng, d);
      const SkewMatrix x1 = random_skew(rng, d, 0.5);
      const OrbitStep o = orbit_transform(r2, x1);
      worst = std::max({worst, o.residual, std::abs(std::abs(o.chi) - 1.0)});
    }
    return worst;
  });

  b.run("cocycle", [&] {
    const auto r1 = random_invertible(rng, d), r2 = random_invertible(rng, d), r3 = random_invertible(rng, d);
    const Complex lhs = cocycle(r3, r2).chi * cocycle(compose(r3, r2), r1).chi;
    const Complex rhs = cocycle(r3, compose(r2, r1)).chi * cocycle(r2, r1).chi;
    return std::abs(lhs - rhs);
  });

  if (g == 0) {
    report["warnings"].push_back("G = 0: module checks skipped");
    return b.ok();
  }
  if (d > kMaxModuleModes) {
    report["warnings"].push_back("d > 6: module checks skipped");
    return b.ok();
  }

  const Real s = 0.5;
  auto sv = [&] { return random_supervector(rng, g, d, s); };
  auto tensor = [&] { return ModuleTensor(g, d, random_module(rng, g, d).amplitudes() * s); };

  b.run("coherent_inner", [&] {
    const SuperVector xi = sv(), eta = sv();
    return rel(lambda_inner(coherent(xi), coherent(eta)), gexp(lambda_inner(xi, eta)));
  });

  b.run("coherent_even_product", [&] {
    const ModuleTensor e = coherent(sv());
    const ModuleTensor x = parity_part(tensor(), 0), y = parity_part(tensor(), 0);
    return rel(lambda_inner(e, mproduct(x, y)), lambda_inner(e, x) * lambda_inner(e, y));
  });

  b.run("weyl_group_law", [&] {
    const SuperVector xi = sv(), eta = sv();
    const ModuleTensor x = tensor();
    const ModuleTensor lhs = weyl(xi).apply(weyl(eta).apply(x));
    const GrassmannElement phase = gexp(Complex(0.0, -1.0) * omega_form(xi, eta));
    return rel(lhs, phase * weyl(xi + eta).apply(x));
  });

  b.run("weyl_isometry", [&] {
    const WeylOperator w = weyl(sv());
    const ModuleTensor x = tensor(), y = tensor();
    return rel(lambda_inner(w.apply(x), w.apply(y)), lambda_inner(x, y));
  });

  b.run("weyl_ultracoherent", [&] {
    const SuperVector eta = sv(), xi = sv();
    const SkewMatrix x = random_skew(rng, d, s);
    return rel(weyl_on_ultracoherent(eta, x, xi), weyl(eta).apply(ultracoherent(x, xi)));
  });

  b.run("weyl_restricted", [&] {
    // F spanned by the first d - 1 modes after a random unitary change of basis.
    const Matrix q = random_unitary(rng, d);
    const Matrix p = q * coordinate_projector(d, full_set(d - 1)) * q.adjoint();
    Matrix blk = coordinate_projector(d, full_set(d - 1));
    if (d > 1) blk.topLeftCorner(d - 1, d - 1) = random_unitary(rng, d - 1);
    const Matrix sf = q * blk * q.adjoint();
    const SuperVector eta = sv().apply(p);
    const ModuleTensor x = tensor();
    const RegularOperator gs = RegularOperator::fock(g, gamma(sf));
    const RegularOperator gsp = RegularOperator::fock(g, gamma(sf.adjoint() * p));
    const RegularOperator gp = RegularOperator::fock(g, gamma(p));
    return rel(gs.apply(weyl(eta).apply(gsp.apply(x))), weyl(eta.apply(sf)).apply(gp.apply(x)));
  });

  const Matrix p1 = coordinate_projector(d, 1), p2 = coordinate_projector(d, full_set(d) ^ 1u);

  b.run("weyl_commuting_factors", [&] {
    const SuperVector eta = sv();
    const ModuleTensor x = tensor();
    const ModuleTensor a = weyl(eta.apply(p1)).apply(weyl(eta.apply(p2)).apply(x));
    const ModuleTensor c = weyl(eta.apply(p2)).apply(weyl(eta.apply(p1)).apply(x));
    return std::max(rel(a, weyl(eta).apply(x)), rel(c, weyl(eta).apply(x)));
  });

  b.run("weyl_factorize", [&] {
    Real worst = 0.0;
    for (int k = 0; k < 2; ++k) {
      const SuperVector eta = sv();
      const ModuleTensor x1 = parity_part(restrict_modes(tensor(), 1u), k);
      const ModuleTensor x2 = restrict_modes(tensor(), full_set(d) ^ 1u);
      worst = std::max(worst, rel(weyl_factorize(eta, p1, p2, x1, x2), weyl(eta).apply(mproduct(x1, x2))));
    }
    return worst;
  });

  b.run("module_intertwining", [&] {
    const OrthogonalTransform r = random_invertible(rng, d);
    const RegularOperator t = module_lift(implement_general(r).t, g);
    const SuperVector xi = sv();
    const ModuleTensor x = tensor();
    return rel(t.apply(weyl(xi).apply(x)), weyl(act(r, xi)).apply(t.apply(x)));
  });

  return b.ok();
}

}  // namespace superfock::cli

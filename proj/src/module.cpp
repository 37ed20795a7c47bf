// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#include "superfock/module.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace superfock {

namespace {

Eigen::Index dim_of(int n) { return Eigen::Index(1) << n; }

Real factorial(int p) {
  Real f = 1.0;
  for (int k = 2; k <= p; ++k) f *= k;
  return f;
}

void check_shape(const ModuleTensor& a, const ModuleTensor& b, const char* what) {
  require_dims(a.generators() == b.generators() && a.modes() == b.modes(), std::string(what) + ": shape mismatch");
}

}  // namespace

ModuleTensor::ModuleTensor(int generators, int modes)
    : ModuleTensor(generators, modes, Matrix::Zero(dim_of(generators), dim_of(modes))) {}

ModuleTensor::ModuleTensor(int generators, int modes, Matrix amplitudes)
    : generators_(generators), modes_(modes), amps_(std::move(amplitudes)) {
  require_dims(generators >= 0 && modes >= 0 && generators + modes <= 2 * kMaxIndices,
               "ModuleTensor: size out of range");
  require_dims(amps_.rows() == dim_of(generators) && amps_.cols() == dim_of(modes),
               "ModuleTensor: amplitude block is not 2^G x 2^d");
}

ModuleTensor ModuleTensor::vacuum(int generators, int modes) {
  ModuleTensor t(generators, modes);
  t.amps_(0, 0) = 1.0;
  return t;
}

ModuleTensor ModuleTensor::product(const GrassmannElement& lambda, const FockVector& f) {
  return ModuleTensor(lambda.generators(), f.modes(), lambda.amplitudes() * f.amplitudes().transpose());
}

ModuleTensor ModuleTensor::from_flat(int generators, int modes, const Vector& flat) {
  require_dims(flat.size() == dim_of(generators) * dim_of(modes), "ModuleTensor::from_flat: length mismatch");
  return ModuleTensor(generators, modes, flat.reshaped(dim_of(generators), dim_of(modes)));
}

Vector ModuleTensor::flat() const { return amps_.reshaped(); }

ModuleTensor ModuleTensor::fock_degree(int p) const {
  ModuleTensor out(generators_, modes_);
  for (Eigen::Index a = 0; a < amps_.cols(); ++a)
    if (popcount(Bits(a)) == p) out.amps_.col(a) = amps_.col(a);
  return out;
}

ModuleTensor ModuleTensor::bidegree(int p, int n) const {
  ModuleTensor out(generators_, modes_);
  for (Eigen::Index a = 0; a < amps_.cols(); ++a) {
    if (popcount(Bits(a)) != n) continue;
    for (Eigen::Index g = 0; g < amps_.rows(); ++g)
      if (popcount(Bits(g)) == p) out.amps_(g, a) = amps_(g, a);
  }
  return out;
}

Parity ModuleTensor::parity(Real tol) const {
  bool even = false, odd = false;
  for (Eigen::Index a = 0; a < amps_.cols(); ++a)
    for (Eigen::Index g = 0; g < amps_.rows(); ++g) {
      if (std::abs(amps_(g, a)) <= tol) continue;
      ((popcount(Bits(g)) + popcount(Bits(a))) % 2 ? odd : even) = true;
    }
  if (even && odd) return Parity::mixed;
  return odd ? Parity::odd : Parity::even;
}

ModuleTensor& ModuleTensor::operator+=(const ModuleTensor& o) {
  check_shape(*this, o, "ModuleTensor");
  amps_ += o.amps_;
  return *this;
}

ModuleTensor& ModuleTensor::operator-=(const ModuleTensor& o) {
  check_shape(*this, o, "ModuleTensor");
  amps_ -= o.amps_;
  return *this;
}

ModuleTensor& ModuleTensor::operator*=(Complex s) {
  amps_ *= s;
  return *this;
}

ModuleTensor operator+(ModuleTensor a, const ModuleTensor& b) { return a += b; }
ModuleTensor operator-(ModuleTensor a, const ModuleTensor& b) { return a -= b; }
ModuleTensor operator*(Complex s, ModuleTensor a) { return a *= s; }

ModuleTensor operator*(const GrassmannElement& lambda, const ModuleTensor& a) {
  require_dims(lambda.generators() == a.generators(), "Grassmann scaling: generator mismatch");
  return ModuleTensor(a.generators(), a.modes(), left_multiplication(lambda) * a.amplitudes());
}

SuperVector SuperVector::term(int generators, int m, const Vector& f) {
  require_dims(m >= 1 && m <= generators, "SuperVector::term: generator index out of range");
  Matrix c = Matrix::Zero(generators, f.size());
  c.row(m - 1) = f.transpose();
  return SuperVector(std::move(c));
}

ModuleTensor SuperVector::embed() const {
  ModuleTensor t(generators(), modes());
  for (int m = 0; m < generators(); ++m)
    for (int k = 0; k < modes(); ++k) t.amplitudes()(Bits(1) << m, Bits(1) << k) = c_(m, k);
  return t;
}

RegularOperator RegularOperator::identity(int generators, int modes) {
  return fock(generators, FockOperator::Identity(dim_of(modes), dim_of(modes)));
}

RegularOperator RegularOperator::fock(int generators, const FockOperator& t) {
  const int d = std::countr_zero(Bits(t.rows()));
  require_dims(t.rows() == t.cols() && t.rows() == dim_of(d), "RegularOperator::fock: operator is not 2^d square");
  RegularOperator r(generators, d);
  r.add_term(GrassmannElement::unit(generators), t);
  return r;
}

RegularOperator RegularOperator::scalar(const GrassmannElement& mu, int modes) {
  RegularOperator r(mu.generators(), modes);
  r.add_term(mu, FockOperator::Identity(dim_of(modes), dim_of(modes)));
  return r;
}

void RegularOperator::add_term(const GrassmannElement& mu, const FockOperator& t) {
  require_dims(mu.generators() == generators_, "RegularOperator: generator mismatch");
  require_dims(t.rows() == dim_of(modes_) && t.cols() == dim_of(modes_), "RegularOperator: operator size mismatch");
  terms_.push_back({mu, t});
}

ModuleTensor RegularOperator::apply(const ModuleTensor& x) const {
  require_dims(x.generators() == generators_ && x.modes() == modes_, "RegularOperator::apply: shape mismatch");
  Matrix out = Matrix::Zero(x.amplitudes().rows(), x.amplitudes().cols());
  for (const auto& t : terms_) out += left_multiplication(t.coeff) * x.amplitudes() * t.op.transpose();
  return ModuleTensor(generators_, modes_, std::move(out));
}

Matrix RegularOperator::materialize() const {
  const Eigen::Index ng = dim_of(generators_), nf = dim_of(modes_);
  Matrix out = Matrix::Zero(ng * nf, ng * nf);
  for (const auto& t : terms_) {
    const Matrix l = left_multiplication(t.coeff);
    for (Eigen::Index b = 0; b < nf; ++b)
      for (Eigen::Index a = 0; a < nf; ++a) {
        const Complex tab = t.op(a, b);
        if (tab == Complex(0)) continue;
        out.block(a * ng, b * ng, ng, ng) += tab * l;
      }
  }
  return out;
}

RegularOperator RegularOperator::canonical() const {
  std::map<Bits, FockOperator> ops;
  for (const auto& t : terms_)
    for (Eigen::Index p = 0; p < t.coeff.amplitudes().size(); ++p) {
      const Complex c = t.coeff.amplitudes()[p];
      if (c == Complex(0)) continue;
      auto [it, fresh] = ops.try_emplace(Bits(p), FockOperator::Zero(dim_of(modes_), dim_of(modes_)));
      it->second += c * t.op;
    }
  RegularOperator out(generators_, modes_);
  for (auto& [p, op] : ops) out.add_term(GrassmannElement::monomial(generators_, ModeSubset(p)), op);
  return out;
}

RegularOperator RegularOperator::operator+(const RegularOperator& o) const {
  require_dims(o.generators_ == generators_ && o.modes_ == modes_, "RegularOperator: shape mismatch");
  RegularOperator out = *this;
  out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
  return out;
}

RegularOperator RegularOperator::operator-(const RegularOperator& o) const { return *this + Complex(-1.0) * o; }

RegularOperator operator*(Complex s, RegularOperator a) {
  for (auto& t : a.terms_) t.op *= s;
  return a;
}

RegularOperator RegularOperator::operator*(const RegularOperator& o) const {
  require_dims(o.generators_ == generators_ && o.modes_ == modes_, "RegularOperator: shape mismatch");
  const RegularOperator a = canonical(), b = o.canonical();
  std::map<Bits, FockOperator> ops;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      const GrassmannElement mu = ta.coeff * tb.coeff;
      for (Eigen::Index p = 0; p < mu.amplitudes().size(); ++p) {
        const Complex c = mu.amplitudes()[p];
        if (c == Complex(0)) continue;
        auto [it, fresh] = ops.try_emplace(Bits(p), FockOperator::Zero(dim_of(modes_), dim_of(modes_)));
        it->second += c * (ta.op * tb.op);
      }
    }
  RegularOperator out(generators_, modes_);
  for (auto& [p, op] : ops) out.add_term(GrassmannElement::monomial(generators_, ModeSubset(p)), op);
  return out;
}

ModuleTensor mproduct(const ModuleTensor& x, const ModuleTensor& y) {
  check_shape(x, y, "mproduct");
  const Bits gfull = full_set(x.generators()), mfull = full_set(x.modes());
  const Matrix& m = x.amplitudes();
  const Matrix& n = y.amplitudes();
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (Bits a = 0; a <= mfull; ++a)
    for (Bits p = 0; p <= gfull; ++p) {
      const Complex mpa = m(p, a);
      if (mpa == Complex(0)) continue;
      const Bits acomp = mfull ^ a, pcomp = gfull ^ p;
      for (Bits b = acomp;; b = (b - 1) & acomp) {
        const Real sb = Real(wedge_sign(a, b));
        for (Bits q = pcomp;; q = (q - 1) & pcomp) {
          const Complex nqb = n(q, b);
          if (nqb != Complex(0)) out(p | q, a | b) += sb * Real(wedge_sign(p, q)) * mpa * nqb;
          if (q == 0) break;
        }
        if (b == 0) break;
      }
    }
  return ModuleTensor(x.generators(), x.modes(), std::move(out));
}

namespace {

// sum_{P,Q} s(P) g(P,Q) kappa_P kappa_Q, with s the reversal sign of kappa_P*.
GrassmannElement contract_gram(const Matrix& g, int generators) {
  const Bits full = full_set(generators);
  GrassmannElement out(generators);
  for (Bits p = 0; p <= full; ++p) {
    const Real sp = Real(reversal_sign(popcount(p)));
    const Bits comp = full ^ p;
    for (Bits q = comp;; q = (q - 1) & comp) {
      const Complex v = g(p, q);
      if (v != Complex(0)) out.amplitudes()[p | q] += sp * Real(wedge_sign(p, q)) * v;
      if (q == 0) break;
    }
  }
  return out;
}

// sum_{m,n} g(m,n) kappa_m kappa_n for degree-one generators.
GrassmannElement contract_pairs(const Matrix& g) {
  const int gens = int(g.rows());
  GrassmannElement out(gens);
  for (int m = 0; m < gens; ++m)
    for (int n = m + 1; n < gens; ++n) out.amplitudes()[(Bits(1) << m) | (Bits(1) << n)] = g(m, n) - g(n, m);
  return out;
}

}  // namespace

GrassmannElement lambda_inner(const ModuleTensor& x, const ModuleTensor& y) {
  check_shape(x, y, "lambda_inner");
  return contract_gram(x.amplitudes().conjugate() * y.amplitudes().transpose(), x.generators());
}

GrassmannElement lambda_inner(const SuperVector& xi, const SuperVector& eta) {
  require_dims(xi.generators() == eta.generators() && xi.modes() == eta.modes(), "lambda_inner: shape mismatch");
  return contract_pairs(xi.coeffs().conjugate() * eta.coeffs().transpose());
}

GrassmannElement lambda_bilinear(const SuperVector& xi, const SuperVector& eta) {
  require_dims(xi.generators() == eta.generators() && xi.modes() == eta.modes(), "lambda_bilinear: shape mismatch");
  return contract_pairs(xi.coeffs() * eta.coeffs().transpose());
}

Real module_norm(const ModuleTensor& x) { return weighted_norm(x, 0.0); }

Real weighted_norm(const ModuleTensor& x, Real alpha) {
  if (alpha < 0) throw ValidationError("weighted_norm: alpha must be nonnegative");
  Real s = 0.0;
  const Matrix& m = x.amplitudes();
  for (Eigen::Index a = 0; a < m.cols(); ++a) {
    const Real w = std::pow(factorial(popcount(Bits(a))), alpha);
    for (Eigen::Index p = 0; p < m.rows(); ++p) s += w * inverse_factorial_sq(popcount(Bits(p))) * std::norm(m(p, a));
  }
  return std::sqrt(s);
}

ModuleTensor coherent(const SuperVector& xi) {
  const ModuleTensor x = xi.embed();
  ModuleTensor term = ModuleTensor::vacuum(xi.generators(), xi.modes());
  ModuleTensor sum = term;
  for (int p = 1; p <= std::min(xi.generators(), xi.modes()); ++p) {
    term = Complex(1.0 / p) * mproduct(x, term);
    sum += term;
  }
  return sum;
}

ModuleTensor ultracoherent(const SkewMatrix& x, const SuperVector& xi) {
  require_dims(x.dim() == xi.modes(), "ultracoherent: mode mismatch");
  const ModuleTensor gauss = ModuleTensor::product(GrassmannElement::unit(xi.generators()), exp_omega(x));
  return mproduct(coherent(xi), gauss);
}

RegularOperator b_plus(const SuperVector& eta) {
  RegularOperator r(eta.generators(), eta.modes());
  for (int m = 0; m < eta.generators(); ++m)
    r.add_term(GrassmannElement::generator(eta.generators(), m + 1), create(eta.coeffs().row(m).transpose()));
  return r;
}

RegularOperator b_minus(const SuperVector& eta) { return superadjoint(b_plus(eta)); }

RegularOperator superadjoint(const RegularOperator& t) {
  RegularOperator out(t.generators(), t.modes());
  for (const auto& term : t.terms()) out.add_term(gstar(term.coeff), term.op.adjoint());
  return out;
}

std::vector<SuperVector> separating_family(int generators, int modes) {
  const int cells = generators * modes;
  require_dims(cells <= 12, "separating_family: too many coefficients");
  const Complex values[3] = {0.0, 1.0, Complex(0.0, 1.0)};
  std::vector<SuperVector> out;
  std::vector<int> digit(cells, 0);
  for (;;) {
    Matrix c(generators, modes);
    for (int k = 0; k < cells; ++k) c(k % generators, k / generators) = values[digit[k]];
    out.emplace_back(std::move(c));
    int k = 0;
    while (k < cells && ++digit[k] == 3) digit[k++] = 0;
    if (k == cells) break;
  }
  return out;
}

namespace {

int rank_of_gram(const Matrix& gram, Real rel_tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  const RealVector s = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Real top = s.size() ? s.maxCoeff() : 0.0;
  int r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) r += top > 0 && s[k] > rel_tol * top;
  return r;
}

}  // namespace

int separating_rank(int generators, int modes, Real rel_tol) {
  const Eigen::Index ng = dim_of(generators), nf = dim_of(modes);
  const Bits full = full_set(generators);
  Matrix gram = Matrix::Zero(ng * nf, ng * nf);
  Matrix rows(ng, ng * nf);
  for (const SuperVector& zeta : separating_family(generators, modes)) {
    const Matrix m = coherent(zeta).amplitudes().conjugate();
    // (exp zeta | kappa_Q (x) e_B) collects conj(m(P, B)) kappa_P* kappa_Q.
    rows.setZero();
    for (Eigen::Index b = 0; b < nf; ++b)
      for (Bits p = 0; p <= full; ++p) {
        const Complex v = m(p, b);
        if (v == Complex(0)) continue;
        const Real sp = Real(reversal_sign(popcount(p)));
        const Bits comp = full ^ p;
        for (Bits q = comp;; q = (q - 1) & comp) {
          rows(p | q, q + ng * b) += sp * Real(wedge_sign(p, q)) * v;
          if (q == 0) break;
        }
      }
    gram.noalias() += rows.adjoint() * rows;
  }
  return rank_of_gram(gram, rel_tol);
}

int regular_annihilator_dim(int generators, int modes, Real rel_tol) {
  const Eigen::Index ng = dim_of(generators), nf = dim_of(modes), n = ng * nf;
  // Orthonormal basis of span{exp zeta}.
  Matrix span_gram = Matrix::Zero(n, n);
  for (const SuperVector& zeta : separating_family(generators, modes)) {
    const Vector v = coherent(zeta).flat();
    span_gram.noalias() += v * v.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(span_gram);
  const Real top = eig.eigenvalues().maxCoeff();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < n; ++k)
    if (eig.eigenvalues()[k] > rel_tol * rel_tol * top) keep.push_back(k);
  // Unknowns T_P(a, b) for R = sum_P kappa_P (x) T_P; constraint R s = 0 per span vector s.
  const Eigen::Index unknowns = ng * nf * nf;
  Matrix gram = Matrix::Zero(unknowns, unknowns);
  Matrix rows(n, unknowns);
  for (Eigen::Index k : keep) {
    const Vector s = eig.eigenvectors().col(k);
    rows.setZero();
    for (Bits p = 0; p < Bits(ng); ++p) {
      const Matrix l = left_multiplication(GrassmannElement::monomial(generators, ModeSubset(p)));
      for (Eigen::Index b = 0; b < nf; ++b) {
        const Vector ls = l * s.segment(b * ng, ng);
        for (Eigen::Index a = 0; a < nf; ++a) rows.block(a * ng, p + ng * (a + nf * b), ng, 1) += ls;
      }
    }
    gram.noalias() += rows.adjoint() * rows;
  }
  return int(unknowns) - rank_of_gram(gram, rel_tol);
}

}  // namespace superfock

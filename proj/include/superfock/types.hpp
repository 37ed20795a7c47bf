// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace superfock {

using Real = double;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Shapes or mode counts of two operands disagree.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input fails a mathematical precondition (skewness, orthogonality, ...).
struct ValidationError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A rank decision fell inside the tolerance band and was not guessed.
struct AmbiguityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require_dims(bool ok, const std::string& what) {
  if (!ok) throw DimensionError(what);
}

/// Largest absolute entry; zero for empty matrices.
template <typename Derived>
Real max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? Real(0) : Real(m.cwiseAbs().maxCoeff());
}

}  // namespace superfock

#pragma once

#include <Eigen/Core>

#include <complex>

namespace arcwalk {

// Matrix/vector roles. Rows/columns are indexed by dense vertex ids or by
// canonical arc indices; which one is part of each function's contract.
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

/// Amplitudes over the arc space.
using StateVector = Eigen::VectorXcd;

using Complex = std::complex<double>;

/// Arc-space matrices are materialized densely only up to this many arcs;
/// larger instances run matrix-free.
inline constexpr int kDefaultDenseCap = 4096;

}  // namespace arcwalk

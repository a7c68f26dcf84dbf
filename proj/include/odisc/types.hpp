#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace odisc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Default validation tolerance, overridable per call.
inline constexpr double kDefaultTol = 1e-9;

// Hilbert-space dimension of an n-qubit register.
inline Index qubit_dim(int n) {
  if (n < 1 || n > 30) {
    throw std::invalid_argument("qubit count must be in [1, 30], got " +
                                std::to_string(n));
  }
  return Index{1} << n;
}

}  // namespace odisc

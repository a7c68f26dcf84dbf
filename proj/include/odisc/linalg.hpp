#pragma once

#include "odisc/types.hpp"

namespace odisc {

// Largest entry magnitude; zero iff the matrix is zero.
double max_abs(const Matrix& a);

// max |a(x,y) - conj(a(y,x))| over all entries.
double hermiticity_defect(const Matrix& a);

bool is_hermitian(const Matrix& a, double tol = kDefaultTol);

// Normalized pure state: sum_x |amplitude_x|^2 = 1 within tol.
class StateVector {
 public:
  explicit StateVector(Vector amplitudes, double tol = kDefaultTol);

  static StateVector basis(Index dim, Index x);
  static StateVector uniform(Index dim);

  const Vector& amplitudes() const { return amplitudes_; }
  Index dim() const { return amplitudes_.size(); }

 private:
  Vector amplitudes_;
};

// Unit-trace positive-semidefinite Hermitian operator. Validation checks all
// three invariants on construction and names the violated one.
class DensityOperator {
 public:
  explicit DensityOperator(Matrix matrix, double tol = kDefaultTol);

  static DensityOperator maximally_mixed(Index dim);
  static DensityOperator pure(const StateVector& psi, double tol = kDefaultTol);

  const Matrix& matrix() const { return matrix_; }
  Index dim() const { return matrix_.rows(); }

 private:
  Matrix matrix_;
};

struct EigenSystem {
  RealVector values;  // descending
  Matrix vectors;     // column j pairs with values[j]; columns orthonormal

  StateVector vector(Index j) const;
};

// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
// Rejects input whose hermiticity defect exceeds tol.
EigenSystem hermitian_eig(const Matrix& a, double tol = kDefaultTol);

// Sum of singular values. Hermitian input (within kDefaultTol) goes through
// the eigenvalue route, anything else through an SVD.
double trace_norm(const Matrix& a);

// Zeroes every off-diagonal entry: sum_x P_x a P_x in the computational basis.
Matrix dephase(const Matrix& a);
DensityOperator dephase(const DensityOperator& rho);

}  // namespace odisc

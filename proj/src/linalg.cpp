#include "odisc/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace odisc {

namespace {

void require_square(const Matrix& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    std::ostringstream msg;
    msg << who << ": expected a square matrix, got " << a.rows() << "x"
        << a.cols();
    throw std::invalid_argument(msg.str());
  }
}

bool is_exactly_diagonal(const Matrix& a) {
  for (Index y = 0; y < a.cols(); ++y) {
    for (Index x = 0; x < a.rows(); ++x) {
      if (x != y && a(x, y) != Complex{0.0, 0.0}) return false;
    }
  }
  return true;
}

// Eigenvalues of a Hermitian matrix, ascending. Diagonal matrices skip the
// solver; validation of thermal states at larger n stays cheap that way.
RealVector hermitian_eigenvalues(const Matrix& a) {
  if (is_exactly_diagonal(a)) {
    RealVector diag = a.diagonal().real();
    std::sort(diag.begin(), diag.end());
    return diag;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian eigenvalue iteration failed");
  }
  return solver.eigenvalues();
}

}  // namespace

double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& a) {
  require_square(a, "hermiticity_defect");
  return max_abs(a - a.adjoint());
}

bool is_hermitian(const Matrix& a, double tol) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

StateVector::StateVector(Vector amplitudes, double tol)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) {
    throw std::invalid_argument("StateVector: dimension must be >= 1");
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol) {
    std::ostringstream msg;
    msg << "StateVector: not normalized, sum |amplitude|^2 = " << norm2
        << " deviates from 1 by " << std::abs(norm2 - 1.0) << " (tol " << tol
        << ")";
    throw std::invalid_argument(msg.str());
  }
}

StateVector StateVector::basis(Index dim, Index x) {
  if (x < 0 || x >= dim) {
    throw std::out_of_range("StateVector::basis: index out of range");
  }
  Vector amps = Vector::Zero(dim);
  amps[x] = 1.0;
  return StateVector(std::move(amps));
}

StateVector StateVector::uniform(Index dim) {
  Vector amps =
      Vector::Constant(dim, Complex{1.0 / std::sqrt(double(dim)), 0.0});
  return StateVector(std::move(amps));
}

DensityOperator::DensityOperator(Matrix matrix, double tol)
    : matrix_(std::move(matrix)) {
  require_square(matrix_, "DensityOperator");
  const double defect = hermiticity_defect(matrix_);
  if (defect > tol) {
    std::ostringstream msg;
    msg << "DensityOperator: not Hermitian, max |A(x,y) - conj(A(y,x))| = "
        << defect << " exceeds tol " << tol;
    throw std::invalid_argument(msg.str());
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > tol) {
    std::ostringstream msg;
    msg << "DensityOperator: trace = " << tr.real() << (tr.imag() < 0 ? "-" : "+")
        << std::abs(tr.imag()) << "i deviates from 1 by "
        << std::abs(tr - Complex{1.0, 0.0}) << " (tol " << tol << ")";
    throw std::invalid_argument(msg.str());
  }
  const double min_eig = hermitian_eigenvalues(matrix_).minCoeff();
  if (min_eig < -tol) {
    std::ostringstream msg;
    msg << "DensityOperator: not positive semidefinite, smallest eigenvalue = "
        << min_eig << " (tol " << tol << ")";
    throw std::invalid_argument(msg.str());
  }
}

DensityOperator DensityOperator::maximally_mixed(Index dim) {
  Matrix m = Matrix::Identity(dim, dim) / double(dim);
  return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::pure(const StateVector& psi, double tol) {
  const Vector& a = psi.amplitudes();
  return DensityOperator(a * a.adjoint(), tol);
}

StateVector EigenSystem::vector(Index j) const {
  if (j < 0 || j >= vectors.cols()) {
    throw std::out_of_range("EigenSystem::vector: index out of range");
  }
  return StateVector(vectors.col(j));
}

EigenSystem hermitian_eig(const Matrix& a, double tol) {
  require_square(a, "hermitian_eig");
  const double defect = hermiticity_defect(a);
  if (defect > tol) {
    std::ostringstream msg;
    msg << "hermitian_eig: not Hermitian, max |A(x,y) - conj(A(y,x))| = "
        << defect << " exceeds tol " << tol;
    throw std::invalid_argument(msg.str());
  }
  // Symmetrize before solving; kills rounding-level asymmetry.
  Matrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigenvalue iteration failed");
  }
  const Index n = a.rows();
  EigenSystem out;
  out.values = RealVector(n);
  out.vectors = Matrix(n, n);
  for (Index j = 0; j < n; ++j) {  // solver returns ascending order
    out.values[j] = solver.eigenvalues()[n - 1 - j];
    out.vectors.col(j) = solver.eigenvectors().col(n - 1 - j);
  }
  return out;
}

double trace_norm(const Matrix& a) {
  require_square(a, "trace_norm");
  if (is_hermitian(a)) {
    Matrix sym = 0.5 * (a + a.adjoint());
    return hermitian_eigenvalues(sym).cwiseAbs().sum();
  }
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues().sum();
}

Matrix dephase(const Matrix& a) {
  require_square(a, "dephase");
  Matrix out = Matrix::Zero(a.rows(), a.cols());
  out.diagonal() = a.diagonal();
  return out;
}

DensityOperator dephase(const DensityOperator& rho) {
  return DensityOperator(dephase(rho.matrix()));
}

}  // namespace odisc

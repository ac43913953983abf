#include "krein/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "krein/error.hpp"

namespace krein {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double min_hermitian_eigenvalue(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double hermitian_residual(const CMatrix& m) {
  return max_abs(m - m.adjoint());
}

void require_distribution(const Distribution& p, double tol, const char* what) {
  if (p.empty()) throw ValidationError(std::string(what) + ": empty distribution");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i]) || p[i] < 0.0) {
      throw ValidationError(std::string(what) + ": entry " + std::to_string(i) +
                            " is negative or not finite");
    }
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > tol) {
    throw ValidationError(std::string(what) + ": entries sum to " + std::to_string(sum) +
                          ", not 1");
  }
}

double stochastic_residual(const RMatrix& m, Stochastic convention) {
  if (m.size() == 0) return 0.0;
  if ((m.array() < 0.0).any() || !m.allFinite()) return std::numeric_limits<double>::infinity();
  const RVector sums = convention == Stochastic::kRows ? RVector(m.rowwise().sum())
                                                       : RVector(m.colwise().sum().transpose());
  return (sums.array() - 1.0).abs().maxCoeff();
}

void require_stochastic(const RMatrix& m, Stochastic convention, double tol, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ShapeError(std::string(what) + ": expected a non-empty square matrix");
  }
  const double r = stochastic_residual(m, convention);
  if (!(r <= tol)) {
    throw ValidationError(std::string(what) + ": not " +
                          (convention == Stochastic::kRows ? "row" : "column") +
                          "-stochastic (residual " + std::to_string(r) + ")");
  }
}

}  // namespace krein

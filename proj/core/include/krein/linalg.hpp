#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace krein {

using Complex = std::complex<double>;
using RMatrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Probability vector over a finite index set.
using Distribution = std::vector<double>;

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Kronecker product a (x) b, row index i*rows(b)+k.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Smallest eigenvalue of the Hermitian part of m.
double min_hermitian_eigenvalue(const CMatrix& m);

/// Max-norm distance from Hermitian.
double hermitian_residual(const CMatrix& m);

/// Throws ValidationError unless p is entrywise >= 0 and sums to 1 within tol.
void require_distribution(const Distribution& p, double tol, const char* what);

/// Convention for stochastic matrices: which index carries the sum-to-one.
enum class Stochastic { kRows, kColumns };

/// Max deviation of the row (or column) sums from 1, or +inf on a negative entry.
double stochastic_residual(const RMatrix& m, Stochastic convention);

/// Throws ValidationError unless m is square, nonnegative and stochastic within tol.
void require_stochastic(const RMatrix& m, Stochastic convention, double tol, const char* what);

}  // namespace krein

#pragma once

#include <cstdint>
#include <vector>

#include "krein/linalg.hpp"
#include "krein/scheme.hpp"

namespace krein {

/// Primitive idempotents and eigenmatrices of a commutative scheme.
///
/// A_j = sum_i P(i, j) E_i and E_j = (1/n) sum_i Q(i, j) A_i. E_0 = J/n.
struct BoseMesnerDecomposition {
  AssociationScheme scheme;
  std::vector<CMatrix> idempotents;
  std::vector<int> multiplicities;
  CMatrix eigenmatrix_P;
  CMatrix eigenmatrix_Q;

  int n() const { return scheme.n(); }
  int d() const { return scheme.d(); }
};

struct DecomposeOptions {
  /// Seed for the generic Hermitian combination of the adjacency matrices.
  std::uint64_t seed = 0x5eed'b05e'3e57'e2ULL;
  /// Relative tolerance for grouping eigenvalues.
  double grouping_tol = 1e-8;
  /// Max residual accepted for A_j = sum_i P(i,j) E_i.
  double residual_tol = 1e-8;
};

/// Simultaneously diagonalizes the adjacency matrices of a commutative scheme.
///
/// Idempotent order: E_0 = J/n, then descending real part (then imaginary
/// part) of the A_1 eigenvalue, ties broken by A_2, A_3, ...
/// Throws UnsupportedInput for non-commutative schemes, AxiomViolation for
/// non-schemes and NumericalError when the refinement residual is too large.
BoseMesnerDecomposition decompose(const AssociationScheme& s, const DecomposeOptions& opts = {});

/// Entrywise product; ShapeError on mismatched shapes.
CMatrix schur(const CMatrix& a, const CMatrix& b);

/// Unit of the Schur product: the n x n all-ones matrix (n >= 1).
CMatrix schur_identity(Eigen::Index n);

/// Residuals of the defining identities, all in max-norm.
struct DecompositionResiduals {
  double orthogonality = 0.0;   // E_i E_j - delta_ij E_i
  double completeness = 0.0;    // sum E_j - I
  double reconstruction = 0.0;  // A_j - sum_i P(i,j) E_i
  double commutation = 0.0;     // A_j E_k - E_k A_j
  double hermiticity = 0.0;     // E_j - E_j^*
  double pq_identity = 0.0;     // P Q - n I
};

DecompositionResiduals residuals(const BoseMesnerDecomposition& dec);

}  // namespace krein

#pragma once

#include <vector>

#include "krein/parameters.hpp"

namespace krein {

/// Commutative hypergroup on the normalized idempotents of a scheme.
///
/// convolution(i, j, k) = (e_i * e_j)(k) = m_k q_ij^k / (m_i m_j), and
/// e_i o e_j = sum_k (e_i * e_j)(k) e_k for e_j = (n / m_j) E_j, so e_0 = J
/// is the Schur unit and every slice is a probability vector.
struct Hypergroup {
  Tensor3<double> convolution;
  std::vector<int> multiplicities;
  std::vector<CMatrix> normalized_idempotents;

  int size() const { return convolution.size(); }
};

/// Builds the hypergroup. Entries in [-1e-8, 0) are clamped to zero; lower
/// entries, or a slice whose sum is off by more than 1e-8, raise NumericalError.
Hypergroup hypergroup_from(const BoseMesnerDecomposition& dec, const KreinTensor& q);

/// Max-norm residual of e_i o e_j - sum_k (e_i * e_j)(k) e_k.
double hypergroup_consistency_residual(const Hypergroup& h);

/// Bilinear extension of the convolution to probability vectors.
Distribution convolve(const Hypergroup& h, const Distribution& mu, const Distribution& nu);

/// Coin measure of a walk: a point mass or a convex combination of indices.
struct Coin {
  Distribution weights;

  static Coin index(int i, int size);
  static Coin mixture(Distribution weights) { return Coin{std::move(weights)}; }
};

/// Column-stochastic T with T(k, j) = sum_i coin(i) (e_i * e_j)(k).
RMatrix classical_chain(const Hypergroup& h, const Coin& coin);

/// start, T start, T^2 start, ..., T^steps start.
std::vector<Distribution> walk(const Hypergroup& h, const Coin& coin, const Distribution& start,
                               int steps);

/// k -> m_k / n.
Distribution plancherel(const Hypergroup& h);

}  // namespace krein

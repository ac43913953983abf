#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "krein/spectral.hpp"

namespace krein {

/// Dense (d+1)^3 tensor indexed [i][j][k].
template <typename T>
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int size, T fill = T{})
      : size_(size), data_(static_cast<std::size_t>(size) * size * size, fill) {}

  int size() const { return size_; }
  T& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  const T& operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }
  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * size_ + j) * size_ + k;
  }
  int size_ = 0;
  std::vector<T> data_;
};

/// p(i, j, k) = p_ij^k with A_i A_j = sum_k p_ij^k A_k.
struct IntersectionTensor {
  Tensor3<std::int64_t> p;
  int d() const { return p.size() - 1; }
};

/// q(i, j, k) = q_ij^k with E_i o E_j = (1/n) sum_k q_ij^k E_k.
struct KreinTensor {
  Tensor3<double> q;
  double tolerance_used = 1e-9;
  int d() const { return q.size() - 1; }
};

inline constexpr double kKreinTolerance = 1e-9;

/// Exact path counts from one representative pair per class, cross-checked on
/// every pair when n <= 64 and on a strided sample otherwise.
/// Throws AxiomViolation if the count depends on the representative.
IntersectionTensor intersection_numbers(const AssociationScheme& s);

/// Max |A_i A_j - sum_k p_ij^k A_k| over all i, j, in integer arithmetic.
std::int64_t intersection_identity_residual(const AssociationScheme& s,
                                            const IntersectionTensor& t);

/// q_ij^k = (n / m_k) tr((E_i o E_j) E_k). Throws CertificationError naming
/// the offending triple if any entry is below -kKreinTolerance.
KreinTensor krein_parameters(const BoseMesnerDecomposition& dec);

/// All (i, j, k) with q_ij^k < -tolerance.
std::vector<std::array<int, 3>> check_krein_condition(const KreinTensor& q);

/// Max-norm residual of E_i o E_j - (1/n) sum_k q_ij^k E_k.
double krein_identity_residual(const BoseMesnerDecomposition& dec, const KreinTensor& q);

/// Max |sum_k m_k q_ij^k - m_i m_j|.
double krein_trace_residual(const BoseMesnerDecomposition& dec, const KreinTensor& q);

}  // namespace krein

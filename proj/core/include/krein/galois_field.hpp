#pragma once

#include <cstdint>
#include <vector>

namespace krein {

/// Arithmetic in GF(q) for the small prime powers q in {2,3,4,5,7,8,9}.
///
/// Elements are 0..q-1. For prime q they are the residues; for q = p^k they
/// are coefficient vectors of polynomials over GF(p) in base p. Products go
/// through log/antilog tables built from a fixed primitive polynomial.
class GaloisField {
 public:
  explicit GaloisField(int q);

  static bool supported(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const;
  /// Throws ParameterError on a == 0.
  int inv(int a) const;

 private:
  int q_ = 0;
  int p_ = 0;
  std::vector<int> add_;
  std::vector<int> neg_;
  std::vector<int> log_;
  std::vector<int> exp_;
};

/// Row-reduces `rows` (each of length v) in place over GF(q) to reduced row
/// echelon form, drops zero rows, and returns the rank.
int reduce_row_echelon(const GaloisField& field, std::vector<std::vector<int>>& rows);

/// Gaussian binomial [v choose d]_q, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(int q, int v, int d);

}  // namespace krein

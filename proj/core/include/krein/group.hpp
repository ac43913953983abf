#pragma once

#include <string>
#include <vector>

namespace krein {

/// A permutation of {0..n-1} in one-line notation: point i maps to perm[i].
using Permutation = std::vector<int>;

/// Finite group given by its Cayley table.
///
/// Elements are indices 0..order-1 and cayley[x][y] is the index of x*y.
/// Construction validates the table (Latin square, identity, inverses and,
/// for order <= 64, associativity on every triple).
class FiniteGroup {
 public:
  static constexpr int kAssociativityCheckLimit = 64;

  explicit FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<std::string> names = {});

  /// Closure of a set of permutations under composition (x*y = x after y).
  /// Element 0 is the identity permutation; the rest appear in discovery order.
  static FiniteGroup from_permutations(const std::vector<Permutation>& generators, int degree);

  static FiniteGroup cyclic(int n);
  /// Dihedral group of the n-gon, order 2n.
  static FiniteGroup dihedral(int n);
  static FiniteGroup symmetric(int degree);
  static FiniteGroup quaternion();

  /// Parses "Z5", "S3", "S4", "D4", "Q8" (case-insensitive prefix letter).
  static FiniteGroup named(const std::string& name);

  int order() const { return static_cast<int>(cayley_.size()); }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return cayley_[x][y]; }
  int inverse(int x) const { return inverse_[x]; }
  const std::vector<std::vector<int>>& cayley() const { return cayley_; }
  const std::vector<std::string>& names() const { return names_; }
  bool is_abelian() const;

  /// Conjugacy classes, each sorted; classes ordered by smallest member, so
  /// the class of the identity comes first when the identity is element 0.
  std::vector<std::vector<int>> conjugacy_classes() const;

 private:
  std::vector<std::vector<int>> cayley_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
  int identity_ = 0;
};

}  // namespace krein

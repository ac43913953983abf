#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "krein/group.hpp"
#include "krein/linalg.hpp"

namespace krein {

/// A d-class association scheme on n points, stored as its relation matrix.
///
/// relation(x, y) = j iff (x, y) lies in R_j. The constructor only checks the
/// shape and index range; the scheme axioms are checked by verify_axioms so
/// that broken relation matrices can still be inspected.
class AssociationScheme {
 public:
  AssociationScheme(std::vector<std::vector<int>> relation, int d,
                    std::vector<std::string> labels = {});

  int n() const { return n_; }
  int d() const { return d_; }
  int num_classes() const { return d_ + 1; }

  int relation(int x, int y) const { return relation_[static_cast<std::size_t>(x) * n_ + y]; }
  std::vector<std::vector<int>> relation_rows() const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// 0/1 matrix A_j.
  IntMatrix adjacency(int j) const;
  RMatrix adjacency_real(int j) const;

  /// Row sums of A_j taken on row 0. Row-constant for valid schemes.
  std::vector<int> valencies() const;

  friend bool operator==(const AssociationScheme&, const AssociationScheme&) = default;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<int> relation_;
  std::vector<std::string> labels_;
};

struct Violation {
  /// Axiom number: 1 identity, 2 partition, 3 transpose, 4 product closure.
  int axiom = 0;
  /// Point or class indices exhibiting the failure.
  std::vector<int> witness;
  std::string detail;
};

struct AxiomReport {
  bool passed = false;
  /// Only meaningful when passed.
  bool commutative = false;
  std::vector<Violation> violations;
};

/// Checks the four scheme axioms and commutativity in exact integer arithmetic.
AxiomReport verify_axioms(const AssociationScheme& s);

/// Throws AxiomViolation describing the first violation unless s is a scheme.
void require_scheme(const AssociationScheme& s, bool require_commutative = false);

/// Left-translation scheme of a group: (y, z) is in class x iff y = x z.
/// Class 0 is the identity; the remaining classes follow element order.
AssociationScheme build_group_scheme(const FiniteGroup& g);

/// Conjugacy-class subscheme B_j = sum of A_x over x in C_j.
AssociationScheme build_conjugacy_scheme(const FiniteGroup& g);

/// Orbits of a transitive permutation group on ordered pairs.
AssociationScheme build_orbit_scheme(const std::vector<Permutation>& generators, int points);

inline constexpr std::size_t kDefaultVertexCap = 5000;

/// Johnson scheme J(v, k) on k-subsets; class j iff the subsets share k - j points.
AssociationScheme build_johnson(int v, int k, std::size_t max_vertices = kDefaultVertexCap);

/// Grassmann scheme J_q(v, d) on d-dimensional subspaces of GF(q)^v.
/// Class j iff dim(a ^ b) = d - j, so class 0 is the identity relation.
AssociationScheme build_grassmann(int q, int v, int d,
                                  std::size_t max_vertices = kDefaultVertexCap);

}  // namespace krein

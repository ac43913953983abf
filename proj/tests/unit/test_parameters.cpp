#include <gtest/gtest.h>

#include "catalog.hpp"
#include "krein/error.hpp"
#include "krein/parameters.hpp"
#include "krein/spectral.hpp"
#include "oracles.hpp"

namespace krein {
namespace {

TEST(IntersectionNumbers, Z2) {
  const auto p = intersection_numbers(build_group_scheme(FiniteGroup::cyclic(2)));
  EXPECT_EQ(p.p(1, 1, 0), 1);
  EXPECT_EQ(p.p(1, 1, 1), 0);
}

TEST(IntersectionNumbers, J42MatchesPathCounting) {
  const auto s = build_johnson(4, 2);
  const auto p = intersection_numbers(s);
  EXPECT_EQ(p.p(1, 1, 1), 2);
  EXPECT_EQ(p.p(1, 1, 0), 4);
  EXPECT_EQ(p.p(1, 1, 2), 4);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k <= 2; ++k) EXPECT_EQ(p.p(i, j, k), oracle::intersection_by_product(s, i, j, k));
  const IntMatrix a1 = s.adjacency(1);
  EXPECT_EQ(a1 * a1, 4 * s.adjacency(0) + p.p(1, 1, 1) * s.adjacency(1) + p.p(1, 1, 2) * s.adjacency(2));
}

TEST(IntersectionNumbers, GroupSchemeIsTheMultiplicationTable) {
  for (const char* name : {"Z5", "S3", "Q8"}) {
    const auto g = FiniteGroup::named(name);
    const auto p = intersection_numbers(build_group_scheme(g));
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y)
        for (int z = 0; z < g.order(); ++z) ASSERT_EQ(p.p(x, y, z), z == g.mul(x, y) ? 1 : 0) << name;
  }
}

TEST(IntersectionNumbers, ExactIdentityOnAllBuiltins) {
  for (const auto& ns : testing::builtin_schemes()) {
    const auto p = intersection_numbers(ns.scheme);
    EXPECT_EQ(intersection_identity_residual(ns.scheme, p), 0) << ns.name;
    const auto val = ns.scheme.valencies();
    for (int i = 0; i <= p.d(); ++i)
      for (int j = 0; j <= p.d(); ++j) {
        EXPECT_EQ(p.p(0, j, i), i == j ? 1 : 0) << ns.name;
        std::int64_t sum = 0;
        for (int k = 0; k <= p.d(); ++k) sum += p.p(i, j, k) * val[k];
        EXPECT_EQ(sum, std::int64_t(val[i]) * val[j]) << ns.name;
      }
  }
}

TEST(IntersectionNumbers, RepresentativeDependenceIsAnAxiomViolation) {
  std::vector<std::vector<int>> rel(4, std::vector<int>(4));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) rel[x][y] = x == y ? 0 : 1 + (std::abs(x - y) > 1);
  EXPECT_THROW(intersection_numbers(AssociationScheme(rel, 2)), AxiomViolation);
}

TEST(KreinParameters, Z2) {
  const auto q = krein_parameters(decompose(build_group_scheme(FiniteGroup::cyclic(2))));
  EXPECT_NEAR(q.q(1, 1, 0), 1.0, 1e-14);
  EXPECT_NEAR(q.q(1, 1, 1), 0.0, 1e-14);
  EXPECT_EQ(q.tolerance_used, kKreinTolerance);
}

TEST(KreinParameters, Z3IsCyclic) {
  const auto dec = decompose(build_group_scheme(FiniteGroup::cyclic(3)));
  const auto q = krein_parameters(dec);
  // idempotent j carries a character chi; the Krein tensor is the character
  // group, so every slice is a point mass and the table is a copy of Z3.
  std::vector<std::vector<int>> table(3, std::vector<int>(3, -1));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const double v = q.q(i, j, k);
        EXPECT_TRUE(std::abs(v) < 1e-12 || std::abs(v - 1) < 1e-12);
        if (std::abs(v - 1) < 1e-12) table[i][j] = k;
      }
  FiniteGroup dual(table);
  EXPECT_TRUE(dual.is_abelian());
  EXPECT_EQ(dual.identity(), 0);
  EXPECT_NE(dual.mul(1, 1), 0);
}

TEST(KreinParameters, J42Slice) {
  const auto q = krein_parameters(decompose(build_johnson(4, 2)));
  EXPECT_NEAR(q.q(1, 1, 0), 3.0, 1e-12);
  EXPECT_NEAR(q.q(1, 1, 1), 0.0, 1e-12);
  EXPECT_NEAR(q.q(1, 1, 2), 3.0, 1e-12);
  EXPECT_TRUE(check_krein_condition(q).empty());
}

TEST(KreinParameters, InvariantsOnAllCommutativeBuiltins) {
  for (const auto& ns : testing::commutative_schemes()) {
    const auto dec = decompose(ns.scheme);
    const auto q = krein_parameters(dec);
    EXPECT_TRUE(check_krein_condition(q).empty()) << ns.name;
    EXPECT_LT(krein_trace_residual(dec, q), 1e-8) << ns.name;
    EXPECT_LT(krein_identity_residual(dec, q), 1e-9) << ns.name;
    for (int i = 0; i <= q.d(); ++i)
      for (int j = 0; j <= q.d(); ++j)
        for (int k = 0; k <= q.d(); ++k) {
          EXPECT_GE(q.q(i, j, k), -1e-9) << ns.name;
          EXPECT_NEAR(q.q(i, j, k), q.q(j, i, k), 1e-10) << ns.name;
          EXPECT_NEAR(q.q(0, j, k), j == k ? 1.0 : 0.0, 1e-12) << ns.name;
        }
  }
}

// For an abelian group the Krein tensor is the multiplication table of the
// dual group, which is isomorphic to the group; compare element-order profiles.
TEST(KreinParameters, AbelianDuality) {
  for (int n : {4, 6, 8}) {
    const auto g = FiniteGroup::cyclic(n);
    const auto q = krein_parameters(decompose(build_group_scheme(g)));
    std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (std::abs(q.q(i, j, k) - 1.0) < 1e-10) table[i][j] = k;
    const FiniteGroup dual(table);
    auto orders = [](const FiniteGroup& h) {
      std::vector<int> out;
      for (int x = 0; x < h.order(); ++x) {
        int o = 1;
        for (int y = x; y != h.identity(); y = h.mul(y, x)) ++o;
        out.push_back(o);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    EXPECT_EQ(orders(dual), orders(g)) << n;
  }
}

TEST(CheckKreinCondition, InjectedNegativeEntry) {
  auto q = krein_parameters(decompose(build_group_scheme(FiniteGroup::cyclic(2))));
  EXPECT_TRUE(check_krein_condition(q).empty());
  q.q(1, 1, 1) = -0.01;
  const auto bad = check_krein_condition(q);
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0], (std::array<int, 3>{1, 1, 1}));
}

}  // namespace
}  // namespace krein

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "catalog.hpp"
#include "generators.hpp"
#include "krein/error.hpp"
#include "krein/spectral.hpp"
#include "oracles.hpp"

namespace krein {
namespace {

TEST(Decompose, Z2) {
  const auto dec = decompose(build_group_scheme(FiniteGroup::cyclic(2)));
  CMatrix e0(2, 2), e1(2, 2);
  e0 << 0.5, 0.5, 0.5, 0.5;
  e1 << 0.5, -0.5, -0.5, 0.5;
  EXPECT_LT(max_abs(dec.idempotents[0] - e0), 1e-14);
  EXPECT_LT(max_abs(dec.idempotents[1] - e1), 1e-14);
  EXPECT_EQ(dec.multiplicities, (std::vector<int>{1, 1}));
}

TEST(Decompose, J42MultiplicitiesAgainstCharacteristicPolynomial) {
  const auto s = build_johnson(4, 2);
  const auto poly = oracle::characteristic_polynomial(s.adjacency(1));
  EXPECT_EQ(poly, (std::vector<std::int64_t>{1, 0, -12, -16, 0, 0, 0}));
  const auto roots = oracle::integer_roots(poly, s.n() * s.d() * 4);
  // descending eigenvalue order, matching the idempotent ordering rule
  std::vector<int> mult;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) mult.push_back(it->second);
  EXPECT_EQ(mult, (std::vector<int>{1, 3, 2}));

  const auto dec = decompose(s);
  EXPECT_EQ(dec.multiplicities, mult);
  int i = 0;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it, ++i)
    EXPECT_NEAR(dec.eigenmatrix_P(i, 1).real(), static_cast<double>(it->first), 1e-10);
}

TEST(Decompose, Z3FourierIdempotents) {
  const auto s = build_group_scheme(FiniteGroup::cyclic(3));
  const auto dec = decompose(s);
  EXPECT_EQ(dec.multiplicities, (std::vector<int>{1, 1, 1}));
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  // class k of the group scheme is the element k of Z3
  for (int j = 0; j < 3; ++j) {
    CMatrix fourier = CMatrix::Zero(3, 3);
    for (int k = 0; k < 3; ++k) fourier += std::pow(w, -j * k) * s.adjacency_real(k).cast<Complex>() / 3.0;
    double best = 1e9;
    for (const auto& e : dec.idempotents) best = std::min(best, max_abs(e - fourier));
    EXPECT_LT(best, 1e-12) << j;
  }
}

TEST(Decompose, NonCommutativeIsUnsupported) {
  EXPECT_THROW(decompose(build_group_scheme(FiniteGroup::named("S3"))), UnsupportedInput);
  EXPECT_THROW(decompose(AssociationScheme({{1, 0}, {0, 1}}, 1)), AxiomViolation);
}

TEST(Decompose, InvariantsOnAllCommutativeBuiltins) {
  for (const auto& ns : testing::commutative_schemes()) {
    const auto dec = decompose(ns.scheme);
    const auto r = residuals(dec);
    const int n = ns.scheme.n();
    EXPECT_LT(r.orthogonality, 1e-10) << ns.name;
    EXPECT_LT(r.completeness, 1e-10) << ns.name;
    EXPECT_LT(r.reconstruction, 1e-8) << ns.name;
    EXPECT_LT(r.commutation, 1e-10) << ns.name;
    EXPECT_LT(r.hermiticity, 1e-10) << ns.name;
    EXPECT_LT(r.pq_identity, 1e-8) << ns.name;

    EXPECT_EQ(static_cast<int>(dec.idempotents.size()), ns.scheme.num_classes()) << ns.name;
    EXPECT_LT(max_abs(dec.idempotents[0] - CMatrix::Constant(n, n, 1.0 / n)), 1e-15) << ns.name;
    EXPECT_EQ(dec.multiplicities[0], 1);
    EXPECT_EQ(std::accumulate(dec.multiplicities.begin(), dec.multiplicities.end(), 0), n) << ns.name;

    const auto val = ns.scheme.valencies();
    for (int j = 0; j <= ns.scheme.d(); ++j) {
      EXPECT_GT(dec.multiplicities[j], 0);
      EXPECT_NEAR(dec.idempotents[j].trace().real(), dec.multiplicities[j], 1e-6) << ns.name;
      EXPECT_LT((dec.idempotents[j].diagonal().array() - Complex(double(dec.multiplicities[j]) / n)).abs().maxCoeff(), 1e-10)
          << ns.name;
      EXPECT_LT(std::abs(dec.eigenmatrix_P(0, j) - Complex(val[j])), 1e-8) << ns.name;
      EXPECT_LT(std::abs(dec.eigenmatrix_Q(0, j) - Complex(dec.multiplicities[j])), 1e-8) << ns.name;
    }
  }
}

TEST(Decompose, OrderingRule) {
  for (const auto& ns : testing::commutative_schemes()) {
    const auto dec = decompose(ns.scheme);
    for (int i = 2; i <= dec.d(); ++i) {
      // lexicographic descending on (Re, Im) of the A_1, A_2, ... eigenvalues
      bool ordered = false;
      for (int j = 1; j <= dec.d() && !ordered; ++j) {
        const Complex a = dec.eigenmatrix_P(i - 1, j), b = dec.eigenmatrix_P(i, j);
        if (std::abs(a.real() - b.real()) > 1e-8) {
          ASSERT_GT(a.real(), b.real()) << ns.name;
          ordered = true;
        } else if (std::abs(a.imag() - b.imag()) > 1e-8) {
          ASSERT_GT(a.imag(), b.imag()) << ns.name;
          ordered = true;
        }
      }
      EXPECT_TRUE(ordered) << ns.name << ": two idempotents share an eigenvalue row";
    }
  }
}

TEST(Decompose, ReproducibleBitForBit) {
  const auto s = build_grassmann(2, 4, 2);
  const auto a = decompose(s), b = decompose(s);
  for (std::size_t j = 0; j < a.idempotents.size(); ++j) EXPECT_TRUE(a.idempotents[j] == b.idempotents[j]);
  EXPECT_TRUE(a.eigenmatrix_P == b.eigenmatrix_P);
}

TEST(Decompose, SeedDoesNotChangeTheResult) {
  const auto s = build_group_scheme(FiniteGroup::cyclic(7));
  DecomposeOptions o;
  o.seed = 12345;
  const auto a = decompose(s), b = decompose(s, o);
  for (std::size_t j = 0; j < a.idempotents.size(); ++j)
    EXPECT_LT(max_abs(a.idempotents[j] - b.idempotents[j]), 1e-12);
}

TEST(Schur, AdjacencyIdentities) {
  const auto s = build_johnson(5, 2);
  for (int i = 0; i <= s.d(); ++i) {
    const CMatrix ai = s.adjacency_real(i).cast<Complex>();
    EXPECT_EQ(schur(ai, ai), ai);
    for (int j = 0; j <= s.d(); ++j)
      if (j != i) EXPECT_EQ(max_abs(schur(ai, s.adjacency_real(j).cast<Complex>())), 0.0);
  }
}

TEST(Schur, Z2IdempotentSquare) {
  const auto dec = decompose(build_group_scheme(FiniteGroup::cyclic(2)));
  const CMatrix sq = schur(dec.idempotents[1], dec.idempotents[1]);
  EXPECT_LT(max_abs(sq - CMatrix::Constant(2, 2, 0.25)), 1e-15);
  EXPECT_LT(max_abs(sq - 0.5 * dec.idempotents[0]), 1e-15);
}

TEST(Schur, ShapeMismatch) {
  EXPECT_THROW(schur(CMatrix::Zero(2, 2), CMatrix::Zero(2, 3)), ShapeError);
}

TEST(SchurIdentity, SmallSizes) {
  EXPECT_EQ(schur_identity(1), CMatrix::Ones(1, 1));
  EXPECT_EQ(schur_identity(2), CMatrix::Ones(2, 2));
  const CMatrix j3 = schur_identity(3);
  EXPECT_LT(max_abs(j3 * j3 - 3.0 * j3), 1e-15);
  const CMatrix p = j3 / 3.0;
  EXPECT_LT(max_abs(p * p - p), 1e-15);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(p);
  EXPECT_NEAR(es.eigenvalues()(2), 1.0, 1e-14);
  EXPECT_NEAR(es.eigenvalues()(1), 0.0, 1e-14);
  EXPECT_THROW(schur_identity(0), ParameterError);
}

TEST(SchurIdentityProperty, IsTheUnit) {
  gen::Engine rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen::integer(rng, 1, 7);
    const CMatrix m = gen::complex_matrix(rng, n, n);
    EXPECT_EQ(schur(schur_identity(n), m), m);
    const CVector e = CVector::Ones(n) / std::sqrt(double(n));
    EXPECT_LT(max_abs(schur_identity(n) - double(n) * e * e.adjoint()), 1e-14);
  }
}

}  // namespace
}  // namespace krein

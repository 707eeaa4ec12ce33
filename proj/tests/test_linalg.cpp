#include <gtest/gtest.h>

#include <cmath>

#include "leontief/errors.hpp"
#include "leontief/linalg.hpp"
#include "support/instances.hpp"

namespace leontief {
namespace {

using testing::Rng;

TEST(LuSolve, IdentityReturnsRhs) {
  const DenseVector x = lu_solve(DenseMatrix::identity(3), DenseVector{1, 2, 3});
  EXPECT_EQ(x, (DenseVector{1, 2, 3}));
}

TEST(LuSolve, SymmetricForcedSolution) {
  const DenseVector x = lu_solve(DenseMatrix{{2, 1}, {1, 2}}, DenseVector{3, 3});
  EXPECT_NEAR(x[0], 1.0, 1e-15);
  EXPECT_NEAR(x[1], 1.0, 1e-15);
}

TEST(LuSolve, MatchesCramersRule) {
  const double a = 0.5, b = -0.2, c = -0.1, d = 0.7;
  const double r0 = 0.3, r1 = 0.6;
  const double det = a * d - b * c;
  const double x0 = (r0 * d - b * r1) / det;
  const double x1 = (a * r1 - c * r0) / det;

  const DenseVector x = lu_solve(DenseMatrix{{a, b}, {c, d}}, DenseVector{r0, r1});
  EXPECT_NEAR(x[0], x0, 1e-14);
  EXPECT_NEAR(x[1], x1, 1e-14);
}

TEST(LuSolve, RejectsSingularAndNonSquare) {
  EXPECT_THROW(lu_solve(DenseMatrix{{1, 2}, {2, 4}}, DenseVector{1, 1}), SingularMatrix);
  EXPECT_THROW(lu_solve(DenseMatrix(2, 3), DenseVector{1, 1}), DimensionMismatch);
  EXPECT_THROW(lu_solve(DenseMatrix::identity(2), DenseVector{1, 1, 1}),
               DimensionMismatch);
}

TEST(LuSolve, SingularityThresholdIsScaleInvariant) {
  // Relative pivot ~1e-14 is singular at any scale; ~1e-6 never is.
  for (double scale : {1e-8, 1.0, 1e8}) {
    const DenseMatrix near_singular{{scale, scale}, {scale, scale * (1 + 1e-14)}};
    EXPECT_THROW(LuFactorization{near_singular}, SingularMatrix) << scale;
    const DenseMatrix fine{{scale, scale}, {scale, scale * (1 + 1e-6)}};
    EXPECT_NO_THROW(LuFactorization{fine}) << scale;
  }
}

TEST(LuSolve, RelativeResidualOnRandomSystems) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = testing::uniform_index(rng, 1, 12);
    const DenseMatrix a = testing::random_p_matrix(rng, n);
    const DenseVector rhs = testing::random_vector(rng, n, -100.0, 100.0);
    const DenseVector x = lu_solve(a, rhs);
    const auto ax = testing::naive_mat_vec(a, x);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(ax[i] - rhs[i]));
    EXPECT_LE(res, 1e-10 * (1.0 + inf_norm(rhs)));
  }
}

TEST(Determinant, MatchesLaplaceExpansion) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = testing::uniform_index(rng, 1, 6);
    const DenseMatrix a = testing::random_matrix(rng, n, n);
    EXPECT_NEAR(determinant(a), testing::laplace_determinant(testing::to_nested(a)),
                1e-12);
  }
  EXPECT_EQ(determinant(DenseMatrix{{1, 2}, {2, 4}}), 0.0);
}

TEST(Norm, EuclideanBasics) {
  EXPECT_EQ(euclidean_norm(DenseVector{0, 0, 0}), 0.0);
  EXPECT_DOUBLE_EQ(euclidean_norm(DenseVector{3, 4}), 5.0);
  EXPECT_EQ(euclidean_norm(DenseVector{}), 0.0);
}

TEST(Norm, EuclideanMatchesDirectSummation) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const DenseVector v = testing::random_vector(rng, 6, -50.0, 50.0);
    double s = 0.0;
    for (double x : v) s += x * x;
    EXPECT_NEAR(euclidean_norm(v), std::sqrt(s), 1e-14 * std::sqrt(s));
  }
}

TEST(Norm, EuclideanSurvivesHugeEntries) {
  EXPECT_DOUBLE_EQ(euclidean_norm(DenseVector{3e200, 4e200}), 5e200);
}

TEST(Products, HadamardAndMatVecIdentities) {
  const DenseVector w{1.5, -2, 7};
  EXPECT_EQ(hadamard(DenseVector::ones(3), w), w);
  EXPECT_EQ(mat_vec(DenseMatrix::identity(3), w), w);
  EXPECT_THROW(hadamard(w, DenseVector{1, 2}), DimensionMismatch);
  EXPECT_THROW(mat_vec(DenseMatrix(2, 2), w), DimensionMismatch);
  EXPECT_THROW(mat_mat(DenseMatrix(2, 3), DenseMatrix(2, 3)), DimensionMismatch);
}

TEST(Products, MatMatMatchesTripleLoop) {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const DenseMatrix a = testing::random_matrix(rng, 3, 3);
    const DenseMatrix b = testing::random_matrix(rng, 3, 3);
    const DenseMatrix c = mat_mat(a, b);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
        EXPECT_NEAR(c(i, j), s, 1e-13);
      }
    }
  }
}

TEST(Products, TransposeAndUnitColumnsAreExact) {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = testing::uniform_index(rng, 1, 6);
    const std::size_t c = testing::uniform_index(rng, 1, 6);
    const DenseMatrix a = testing::random_matrix(rng, r, c);
    EXPECT_EQ(transpose(transpose(a)), a);
    for (std::size_t j = 0; j < c; ++j) {
      DenseVector e(c);
      e[j] = 1.0;
      EXPECT_EQ(mat_vec(a, e), a.column(j));
    }
  }
}

TEST(Construction, RejectsNonFiniteAndRaggedInput) {
  EXPECT_THROW(DenseVector({1.0, NAN}), NonFiniteValue);
  EXPECT_THROW(DenseMatrix(1, 2, std::vector<double>{1.0, INFINITY}), NonFiniteValue);
  EXPECT_THROW(DenseMatrix(2, 2, std::vector<double>{1.0, 2.0, 3.0}), DimensionMismatch);
  EXPECT_THROW(DenseMatrix::from_rows({{1.0, 2.0}, {3.0}}), DimensionMismatch);
}

}  // namespace
}  // namespace leontief

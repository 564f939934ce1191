#include "framepot/constructions.hpp"
#include "framepot/core.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <random>
#include <stdexcept>

using namespace framepot;

TEST(Configuration, RenormalizesNearUnitInput) {
  Configuration c(2, {{1.0 + 5e-7, 0.0}, {0.0, 1.0 - 5e-7}});
  EXPECT_DOUBLE_EQ(c.vector(0).norm(), 1.0);
  EXPECT_DOUBLE_EQ(c.vector(1).norm(), 1.0);
  EXPECT_EQ(c.dim(), 2u);
  EXPECT_EQ(c.size(), 2u);
}

TEST(Configuration, RejectsBadInput) {
  EXPECT_THROW(Configuration(2, {{1.1, 0.0}, {0.0, 1.0}}), std::invalid_argument);
  EXPECT_THROW(Configuration(2, {{1.0, 0.0}}), std::invalid_argument);
  EXPECT_THROW(Configuration(1, {{1.0}, {-1.0}}), std::invalid_argument);
  EXPECT_THROW(Configuration(2, {{1.0, 0.0}, {0.0, 1.0, 0.0}}), std::invalid_argument);
  EXPECT_THROW(Configuration(2, {{0.0, 0.0}, {0.0, 1.0}}), std::invalid_argument);
}

TEST(Configuration, RowsRoundTrip) {
  const Configuration c = oracle::random_config(5, 3, 1);
  const Configuration back(3, c.rows());
  EXPECT_TRUE(back.synthesis().isApprox(c.synthesis(), 1e-15));
}

TEST(Gram, HalfCircleFour) {
  const Matrix g = gram(half_circle(4));
  EXPECT_NEAR(g(0, 1), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(g(0, 2), 0.0, 1e-15);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(g(i, i), 1.0, 1e-15);
  EXPECT_TRUE(g.isApprox(g.transpose()));
}

TEST(Lift, InnerProductsAndDistances) {
  const Configuration c = oracle::random_config(6, 4, 2);
  const auto lifted = lift_projective(c);
  ASSERT_EQ(lifted.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_NEAR(lifted[i].norm(), 1.0, 1e-14);
    for (std::size_t j = 0; j < 6; ++j) {
      const double t = c.vector(i).dot(c.vector(j));
      EXPECT_NEAR(lifted[i].dot(lifted[j]), t * t, 1e-14);
      EXPECT_NEAR((lifted[i] - lifted[j]).squaredNorm(), 2 - 2 * t * t, 1e-14);
    }
  }
  const Configuration lc = lifted_configuration(c);
  EXPECT_EQ(lc.dim(), 16u);
}

TEST(Lift, CircleCoordinatesLieOnTheProjectiveCircle) {
  const Configuration c = oracle::random_config(7, 2, 3);
  const Eigen::Vector3d centre(0.5, 0.0, 0.5);
  for (const auto &q : lift_circle_coordinates(c)) {
    EXPECT_NEAR((q - centre).norm(), 1.0 / std::sqrt(2.0), 1e-14);
    // The circle lies in the plane x + z = 1.
    EXPECT_NEAR(q(0) + q(2), 1.0, 1e-14);
  }
  EXPECT_THROW(lift_circle_coordinates(oracle::random_config(3, 3, 1)), std::invalid_argument);
}

TEST(Lift, ProjectiveCircleDoublesAngles) {
  const Configuration c = oracle::random_config(5, 2, 4);
  const Configuration pc = projective_circle(c);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const double t = c.vector(i).dot(c.vector(j));
      EXPECT_NEAR(pc.vector(i).dot(pc.vector(j)), 2 * t * t - 1, 1e-14);
    }
  }
  // Half-circle points become equally spaced on the full circle.
  const Matrix g = gram(projective_circle(half_circle(6)));
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(g(i, (i + 1) % 6), std::cos(2 * M_PI / 6), 1e-14);
}

TEST(FrameOperator, TightFramesHaveScaledIdentity) {
  const Matrix s = frame_operator(half_circle(5));
  EXPECT_TRUE(s.isApprox(2.5 * Matrix::Identity(2, 2), 1e-14));
  EXPECT_TRUE(is_frame(half_circle(5), 1e-9));
  EXPECT_FALSE(is_frame(Configuration(3, {{1, 0, 0}, {0, 1, 0}}), 1e-9));
  EXPECT_FALSE(is_frame(Configuration(2, {{1, 0}, {-1, 0}, {1, 0}}), 1e-9));
}

TEST(Invariant, InvariantUnderSymmetries) {
  const Configuration c = oracle::random_config(6, 3, 5);
  // Rotate, permute and flip signs.
  const Eigen::Matrix3d q = Eigen::Quaterniond(0.3, -0.2, 0.9, 0.1).normalized().toRotationMatrix();
  Matrix x = q * c.synthesis();
  x.col(0).swap(x.col(4));
  x.col(2) *= -1;
  const Configuration moved(x);
  EXPECT_TRUE(same_invariant(canonical_invariant(c), canonical_invariant(moved), 1e-12));
  EXPECT_EQ(invariant_digest(canonical_invariant(c)), invariant_digest(canonical_invariant(moved)));

  const Configuration other = oracle::random_config(6, 3, 6);
  EXPECT_FALSE(same_invariant(canonical_invariant(c), canonical_invariant(other)));
  EXPECT_NE(invariant_digest(canonical_invariant(c)), invariant_digest(canonical_invariant(other)));
}

TEST(Invariant, SortedAbsoluteOffDiagonal) {
  const auto inv = canonical_invariant(half_circle(4));
  ASSERT_EQ(inv.sorted_abs_offdiag.size(), 6u);
  EXPECT_NEAR(inv.sorted_abs_offdiag[0], 0.0, 1e-15);
  EXPECT_NEAR(inv.sorted_abs_offdiag[1], 0.0, 1e-15);
  for (int i = 2; i < 6; ++i) EXPECT_NEAR(inv.sorted_abs_offdiag[i], std::sqrt(0.5), 1e-15);
  EXPECT_EQ(invariant_digest(inv).size(), 16u);
}

TEST(Properties, InnerProductsBoundedAndTraceIsN) {
  for (unsigned s = 0; s < 50; ++s) {
    const int n = 2 + s % 9, d = 2 + s % 4;
    const Configuration c = oracle::random_config(n, d, 300 + s);
    const Matrix g = gram(c);
    EXPECT_LE(g.cwiseAbs().maxCoeff(), 1.0 + 1e-12);
    EXPECT_NEAR(frame_operator(c).trace(), n, 1e-10);
  }
}

TEST(Properties, InvariantUnderRandomGroupActions) {
  std::mt19937 gen(77);
  std::normal_distribution<double> normal;
  for (unsigned s = 0; s < 30; ++s) {
    const int n = 4 + s % 5, d = 2 + s % 3;
    const Configuration c = oracle::random_config(n, d, 400 + s);
    Matrix a(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) a(i, j) = normal(gen);
    const Matrix q = Eigen::HouseholderQR<Matrix>(a).householderQ();
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(n);
    perm.setIdentity();
    std::shuffle(perm.indices().data(), perm.indices().data() + n, gen);
    Matrix x = q * c.synthesis() * perm;
    for (int j = 0; j < n; ++j) {
      if (gen() % 2) x.col(j) *= -1;
    }
    const auto a_inv = canonical_invariant(c).sorted_abs_offdiag;
    const auto b_inv = canonical_invariant(Configuration(x)).sorted_abs_offdiag;
    ASSERT_EQ(a_inv.size(), b_inv.size());
    for (std::size_t i = 0; i < a_inv.size(); ++i) EXPECT_NEAR(a_inv[i], b_inv[i], 1e-10);
  }
}

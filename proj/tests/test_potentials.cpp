#include "framepot/constructions.hpp"
#include "framepot/potentials.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

using namespace framepot;

TEST(FpEval, HalfCircleFourClosedForms) {
  // Four ordered pairs at 1/sqrt(2) in each direction, two orthogonal pairs.
  EXPECT_NEAR(fp_eval(half_circle(4), 2.0), 4.0, 1e-14);
  EXPECT_NEAR(fp_eval(half_circle(4), 4.0), 2.0, 1e-14);
  EXPECT_NEAR(fp_eval(half_circle(4), 2.5), 8 * std::pow(0.5, 1.25), 1e-14);
}

TEST(FpEval, MatchesBruteForce) {
  for (unsigned s = 0; s < 10; ++s) {
    const Configuration c = oracle::random_config(6, 3, s);
    for (double p : {0.3, 1.0, 1.5, 2.0, 3.7, 8.0}) {
      EXPECT_NEAR(fp_eval(c, p), oracle::fp(c, p), 1e-12) << p;
    }
  }
}

TEST(FpEval, OnbCopiesAndLiftedEtf) {
  // k copies of an ONB in R^d: each vector has k - 1 parallel partners.
  EXPECT_NEAR(fp_eval(onb_copies(2, 6), 1.0), 12.0 * 5, 1e-12);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_NEAR(fp_eval(lifted_etf(4, k), 1.3), (k + 1.0) * k * std::pow(1.0 / k, 1.3), 1e-12);
  }
}

TEST(FpEval, InfinityIsCoherence) {
  const Configuration c = oracle::random_config(5, 2, 3);
  EXPECT_EQ(fp_eval(c, kInfinity), coherence(c));
  EXPECT_NEAR(coherence(simplex(2)), 0.5, 1e-15);
  EXPECT_NEAR(coherence(half_circle(4)), std::sqrt(0.5), 1e-15);
}

TEST(FpEval, RejectsBadExponent) {
  const Configuration c = half_circle(3);
  EXPECT_THROW(fp_eval(c, 0.0), std::invalid_argument);
  EXPECT_THROW(fp_eval(c, -1.0), std::invalid_argument);
  EXPECT_THROW(fp_eval(c, std::nan("")), std::invalid_argument);
}

TEST(FpEval, PowerMeanTendsToCoherence) {
  const Configuration c = oracle::random_config(6, 3, 8);
  const double mu = coherence(c);
  double prev = 1e300;
  for (double p : {4.0, 16.0, 64.0, 256.0}) {
    const double root = std::pow(fp_eval(c, p), 1.0 / p);
    EXPECT_GE(root, mu - 1e-12);
    EXPECT_LE(root, prev + 1e-12);
    prev = root;
  }
  EXPECT_NEAR(prev, mu, 0.02);
}

TEST(KernelEnergy, PFrameAgreesWithFpEval) {
  const Configuration c = oracle::random_config(5, 3, 4);
  EXPECT_DOUBLE_EQ(kernel_energy(c, PFrameKernel{3.0}).value, fp_eval(c, 3.0));
}

TEST(KernelEnergy, InnerSquareAndChordal) {
  const Configuration c = oracle::random_config(5, 3, 5);
  const double p = 1.7;
  const auto inner = kernel_energy(c, InnerSquareKernel{[p](double s) { return std::pow(s, p / 2); }});
  EXPECT_NEAR(inner.value, fp_eval(c, p), 1e-12);
  // |<x,y>|^2 = ((2 - |x-y|^2) / 2)^2 for unit vectors.
  const auto chordal = kernel_energy(c, ChordalKernel{[](double s) { return std::pow((2 - s) / 2, 2); }});
  EXPECT_NEAR(chordal.value, fp_eval(c, 2.0), 1e-12);
}

TEST(KernelEnergy, DomainErrors) {
  const Configuration repeated = onb_plus(3);
  EXPECT_THROW(kernel_energy(repeated, InnerSquareKernel{[](double s) { return 1 / (1 - s); }, false}),
               std::domain_error);
  EXPECT_THROW(kernel_energy(repeated, ChordalKernel{[](double s) { return 1 / s; }}), std::domain_error);
  EXPECT_NO_THROW(kernel_energy(repeated, ChordalKernel{[](double s) { return s; }, 1.0, true}));
  // Points of the unit sphere cannot be apart by more than a radius-1/2 diameter allows.
  EXPECT_THROW(kernel_energy(half_circle(4), ChordalKernel{[](double s) { return s; }, 0.5}), std::domain_error);
}

TEST(PfpDiscrete, IncludesTheDiagonal) {
  const Configuration c = onb_copies(2, 6);
  EXPECT_NEAR(pfp_discrete(c, 1.0), 0.5, 1e-15);
  EXPECT_THROW(pfp_discrete(c, kInfinity), std::invalid_argument);
}

TEST(Properties, InvariantUnderSymmetries) {
  const Configuration c = oracle::random_config(6, 3, 21);
  const Eigen::Matrix3d q = Eigen::Quaterniond(0.5, 0.1, -0.7, 0.3).normalized().toRotationMatrix();
  Matrix x = q * c.synthesis();
  x.col(1).swap(x.col(5));
  x.col(3) *= -1;
  for (double p : {0.5, 1.7, 4.0}) EXPECT_NEAR(fp_eval(Configuration(x), p), fp_eval(c, p), 1e-10);
}

TEST(Properties, NonincreasingInPAndAboveCoherence) {
  for (unsigned s = 0; s < 20; ++s) {
    const Configuration c = oracle::random_config(5 + s % 4, 2 + s % 3, 700 + s);
    double prev = 1e300;
    for (double p = 0.25; p <= 12.0; p += 0.25) {
      const double v = fp_eval(c, p);
      EXPECT_LE(v, prev + 1e-12);
      EXPECT_GE(std::pow(v, 1.0 / p), coherence(c) - 1e-12);
      prev = v;
    }
  }
}

TEST(Properties, LiftingConsistency) {
  // g(s) = s^{p/2} on inner squares equals f(t) = g(1 - t/2) on squared
  // distances of the lifted points.
  for (unsigned s = 0; s < 10; ++s) {
    const Configuration c = oracle::random_config(6, 3, 800 + s);
    const double p = 0.6 + 0.5 * s;
    const auto g = [p](double v) { return std::pow(std::max(v, 0.0), p / 2); };
    const double direct = kernel_energy(c, InnerSquareKernel{g}).value;
    const double lifted =
        kernel_energy(lifted_configuration(c), ChordalKernel{[g](double t) { return g(1 - t / 2); }}).value;
    EXPECT_NEAR(direct, lifted, 1e-9);
  }
}

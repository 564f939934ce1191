#include "framepot/bounds.hpp"
#include "framepot/constructions.hpp"
#include "framepot/potentials.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

using namespace framepot;

TEST(Welch, Values) {
  EXPECT_NEAR(welch_bound(3, 2).value, 0.5, 1e-15);
  EXPECT_EQ(welch_bound(3, 3).value, 0.0);
  EXPECT_NEAR(welch_bound(7, 3).value, 0.4714045207910317, 1e-15);
  EXPECT_EQ(welch_bound(3, 2).kind, BoundKind::Welch);
  EXPECT_NE(welch_bound(7, 3).applicability.find("no ETF"), std::string::npos);
}

TEST(Welch, BelowCoherenceOfRandomConfigs) {
  for (unsigned s = 0; s < 50; ++s) {
    const int n = 3 + s % 6;
    const int d = 2 + s % 3;
    const Configuration c = oracle::random_config(n, d, s);
    EXPECT_LE(welch_bound(n, d).value, coherence(c) + 1e-12);
  }
  // Attained by the simplex.
  EXPECT_NEAR(welch_bound(4, 3).value, coherence(simplex(3)), 1e-14);
}

TEST(DesignBound, Values) {
  for (int n = 2; n <= 9; ++n) {
    for (int d = 2; d <= 5; ++d) {
      EXPECT_NEAR(design_bound(n, d, 2).value, double(n) * n / d - n, 1e-12);
    }
  }
  EXPECT_NEAR(design_bound(5, 2, 6).value, 2.8125, 1e-14);
  EXPECT_NEAR(design_bound(4, 2, 4).value, 2.0, 1e-14);
  EXPECT_THROW(design_bound(4, 2, 3), std::invalid_argument);
  EXPECT_THROW(design_bound(4, 2, 0), std::invalid_argument);
}

TEST(DesignBound, SphereAverageMatchesQuadrature) {
  for (int p = 2; p <= 10; p += 2) {
    EXPECT_NEAR(even_power_sphere_average(2, p),
                oracle::circle_average([p](double x, double) { return std::pow(x, p); }), 1e-14);
    EXPECT_NEAR(even_power_sphere_average(3, p),
                oracle::sphere2_average([p](double, double, double z) { return std::pow(z, p); }), 1e-13);
  }
  // Large p stays finite.
  EXPECT_GT(even_power_sphere_average(3, 200), 0.0);
  EXPECT_TRUE(std::isfinite(design_bound(10, 3, 200).value));
}

TEST(DesignBound, BelowRandomConfigs) {
  for (unsigned s = 0; s < 50; ++s) {
    const int n = 3 + s % 5;
    const int d = 2 + s % 3;
    const Configuration c = oracle::random_config(n, d, 100 + s);
    for (int p : {2, 4, 6}) EXPECT_GE(fp_eval(c, p), design_bound(n, d, p).value - 1e-9);
  }
}

TEST(LiftedEtfValue, ClosedForm) {
  EXPECT_DOUBLE_EQ(lifted_etf_value(1, 0.37), 2.0);
  EXPECT_DOUBLE_EQ(lifted_etf_value(2, 2.0), 1.5);
  for (int d = 2; d <= 6; ++d) EXPECT_NEAR(lifted_etf_value(d, 2.0), design_bound(d + 1, d, 2).value, 1e-12);
}

TEST(SwitchingPoint, CrossingIdentity) {
  EXPECT_EQ(switching_point(0), 0.0);
  EXPECT_NEAR(switching_point(1), 1.584962500721156, 1e-15);
  EXPECT_THROW(switching_point(-1), std::invalid_argument);
  for (int k = 1; k <= 20; ++k) {
    const double pk = switching_point(k);
    EXPECT_NEAR(lifted_etf_value(k, pk), lifted_etf_value(k + 1, pk), 1e-12) << k;
    EXPECT_LT(pk, switching_point(k + 1));
  }
  // p_{d-1} approaches 2 from below.
  EXPECT_LT(switching_point(999), 2.0);
  EXPECT_NEAR(switching_point(999), 2.0, 1e-3);
}

TEST(FeketeRatio, ExactOnbCopyValues) {
  std::vector<std::pair<int, double>> values;
  for (int k = 1; k <= 8; ++k) values.push_back({2 * k, 2.0 * k * (k - 1)});
  const auto r = fekete_ratio(values);
  ASSERT_EQ(r.size(), 8u);
  for (std::size_t i = 1; i < r.size(); ++i) EXPECT_GE(r[i], r[i - 1]);
  EXPECT_EQ(fekete_ratio({{5, 10.0}}).size(), 1u);
  EXPECT_DOUBLE_EQ(fekete_ratio({{5, 10.0}})[0], 0.5);
}

TEST(TauReference, KnownCases) {
  EXPECT_DOUBLE_EQ(*tau_reference(3, 1.5), 1.0 / 3);
  EXPECT_DOUBLE_EQ(*tau_reference(2, 4), 3.0 / 8);
  EXPECT_FALSE(tau_reference(3, 3).has_value());
  EXPECT_FALSE(tau_reference(2, 3).has_value());
}

#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library except for the Configuration type.

#include "framepot/core.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

/// Ordered-pair p-frame potential of the raw columns (no normalisation),
/// accumulated in long double.
inline double fp_raw(const Eigen::MatrixXd &x, double p) {
  long double sum = 0.0L;
  for (Eigen::Index i = 0; i < x.cols(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (i == j) continue;
      const long double t = std::fabs(static_cast<long double>(x.col(i).dot(x.col(j))));
      sum += std::pow(t, static_cast<long double>(p));
    }
  }
  return static_cast<double>(sum);
}

inline double fp(const framepot::Configuration &c, double p) { return fp_raw(c.synthesis(), p); }

/// Central finite-difference gradient of fp_raw with respect to every entry.
inline Eigen::MatrixXd fd_gradient(const Eigen::MatrixXd &x, double p, double h = 1e-6) {
  Eigen::MatrixXd g(x.rows(), x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      Eigen::MatrixXd plus = x, minus = x;
      plus(i, j) += h;
      minus(i, j) -= h;
      g(i, j) = (fp_raw(plus, p) - fp_raw(minus, p)) / (2 * h);
    }
  }
  return g;
}

/// Points on the unit circle at angles offset + 2 pi k / m.
inline framepot::Configuration circle_points(int m, double offset = 0.0) {
  Eigen::MatrixXd x(2, m);
  for (int k = 0; k < m; ++k) {
    const double a = offset + 2.0 * M_PI * k / m;
    x(0, k) = std::cos(a);
    x(1, k) = std::sin(a);
  }
  return framepot::Configuration(x);
}

/// Random unit vectors from std::normal_distribution (a different generator
/// path from the library's own sampler).
inline framepot::Configuration random_config(int n, int d, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd x(d, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < d; ++i) x(i, j) = normal(gen);
    x.col(j).normalize();
  }
  return framepot::Configuration(x);
}

/// Average of f over S^1 by the trapezoid rule (exact for trigonometric
/// polynomials of degree below m).
inline double circle_average(const std::function<double(double, double)> &f, int m = 4096) {
  long double s = 0.0L;
  for (int k = 0; k < m; ++k) {
    const double a = 2.0 * M_PI * k / m;
    s += f(std::cos(a), std::sin(a));
  }
  return static_cast<double>(s / m);
}

/// Average of f over S^2: Gauss-Legendre in cos(theta) and the trapezoid rule
/// in phi.
inline double sphere2_average(const std::function<double(double, double, double)> &f, int m = 64) {
  // Gauss-Legendre nodes by Newton iteration on P_m.
  std::vector<double> nodes(m), weights(m);
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::fabs(step) < 1e-16) break;
    }
    nodes[i] = z;
    weights[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  const int mphi = 2 * m;
  long double s = 0.0L;
  for (int i = 0; i < m; ++i) {
    const double z = nodes[i];
    const double r = std::sqrt(1.0 - z * z);
    for (int k = 0; k < mphi; ++k) {
      const double a = 2.0 * M_PI * k / mphi;
      s += weights[i] * f(r * std::cos(a), r * std::sin(a), z);
    }
  }
  return static_cast<double>(s / (2.0 * mphi));
}

/// Hermite interpolant through a dense
/// confluent Vandermonde solve. derivs(t, k) gives the k-th derivative.
/// Returns ascending coefficients.
inline std::vector<double> hermite_by_vandermonde(const std::function<double(double, int)> &derivs,
                                                  const std::vector<std::pair<double, int>> &nodes) {
  int n = 0;
  for (const auto &nd : nodes) n += nd.second;
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd rhs(n);
  int row = 0;
  for (const auto &[t, mult] : nodes) {
    for (int k = 0; k < mult; ++k, ++row) {
      // k-th derivative of t^j is j!/(j-k)! t^{j-k}.
      for (int j = k; j < n; ++j) {
        double c = 1.0;
        for (int q = 0; q < k; ++q) c *= (j - q);
        v(row, j) = c * std::pow(t, j - k);
      }
      rhs(row) = derivs(t, k);
    }
  }
  const Eigen::VectorXd c = v.fullPivLu().solve(rhs);
  return std::vector<double>(c.data(), c.data() + c.size());
}

/// Normalised Gegenbauer reference: Chebyshev for d = 2, Legendre for d = 3.
inline double gegenbauer_reference(int k, int d, double t) {
  if (d == 2) return std::cos(k * std::acos(t));
  return std::legendre(static_cast<unsigned>(k), t);
}

}  // namespace oracle

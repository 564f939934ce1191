#include "framepot/designs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace framepot {

double sphere_moment(const std::vector<int> &alpha) {
  const int d = static_cast<int>(alpha.size());
  if (d < 2) throw std::invalid_argument("sphere_moment needs d >= 2");
  int degree = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("sphere_moment needs nonnegative exponents");
    if (a % 2 != 0) return 0.0;
    degree += a;
  }
  // Interleave numerator and denominator factors to keep the running value
  // near 1: numerator factors are the odd numbers of each (a_i - 1)!!.
  std::vector<double> numerator;
  for (int a : alpha) {
    for (int j = 1; j < a; j += 2) numerator.push_back(j);
  }
  double value = 1.0;
  std::size_t next = 0;
  for (int j = 0; j < degree; j += 2) {
    value /= (d + j);
    if (next < numerator.size()) value *= numerator[next++];
  }
  return value;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1.0L;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::size_t>(std::llround(r));
}

// Calls visit(alpha) for every exponent vector of total degree exactly `degree`.
template <typename Visit>
void for_each_monomial(int dim, int degree, std::vector<int> &alpha, int index, Visit &&visit) {
  if (index == dim - 1) {
    alpha[static_cast<std::size_t>(index)] = degree;
    visit(alpha);
    return;
  }
  for (int a = degree; a >= 0; --a) {
    alpha[static_cast<std::size_t>(index)] = a;
    for_each_monomial(dim, degree - a, alpha, index + 1, visit);
  }
}

}  // namespace

DesignReport design_check(const Configuration &config, int t, const DesignCheckOptions &options) {
  if (t < 1) throw std::invalid_argument("design_check needs t >= 1");
  const int d = static_cast<int>(config.dim());
  const std::size_t count = binomial(static_cast<std::size_t>(t + d), static_cast<std::size_t>(d));
  if (count > options.monomial_cap) {
    throw std::invalid_argument("design_check: " + std::to_string(count) +
                                " monomials exceed the cap of " +
                                std::to_string(options.monomial_cap));
  }
  const Matrix &x = config.synthesis();
  const Eigen::Index n = x.cols();
  // powers[i](k, j) = x_k[i]^j
  std::vector<Matrix> powers(static_cast<std::size_t>(d), Matrix(n, t + 1));
  for (int i = 0; i < d; ++i) {
    auto &pw = powers[static_cast<std::size_t>(i)];
    for (Eigen::Index k = 0; k < n; ++k) {
      pw(k, 0) = 1.0;
      for (int j = 1; j <= t; ++j) pw(k, j) = pw(k, j - 1) * x(i, k);
    }
  }

  DesignReport report;
  std::vector<int> alpha(static_cast<std::size_t>(d));
  bool still_passing = true;
  for (int degree = 1; degree <= t; ++degree) {
    double worst = 0.0;
    for_each_monomial(d, degree, alpha, 0, [&](const std::vector<int> &a) {
      double sum = 0.0;
      for (Eigen::Index k = 0; k < n; ++k) {
        double term = 1.0;
        for (int i = 0; i < d; ++i) term *= powers[static_cast<std::size_t>(i)](k, a[static_cast<std::size_t>(i)]);
        sum += term;
      }
      worst = std::max(worst, std::abs(sum / static_cast<double>(n) - sphere_moment(a)));
    });
    report.worst_residual = std::max(report.worst_residual, worst);
    if (still_passing && worst <= options.tol) {
      report.max_strength = degree;
    } else {
      still_passing = false;
    }
  }
  report.passed = report.max_strength == t;
  return report;
}

std::vector<double> distinct_inner_products(const Configuration &config, double cluster_tol) {
  const Matrix g = gram(config);
  std::vector<double> values;
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < g.cols(); ++j) {
      if (g(i, j) < 1.0 - cluster_tol) values.push_back(g(i, j));
    }
  }
  std::sort(values.begin(), values.end());

  std::vector<double> centres;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i] - values[i - 1] > cluster_tol) {
      const double sum = std::accumulate(values.begin() + static_cast<std::ptrdiff_t>(start),
                                         values.begin() + static_cast<std::ptrdiff_t>(i), 0.0);
      centres.push_back(sum / static_cast<double>(i - start));
      start = i;
    }
  }
  return centres;
}

SharpReport sharp_check(const Configuration &config, double cluster_tol,
                        const DesignCheckOptions &options) {
  SharpReport report;
  report.inner_products = distinct_inner_products(config, cluster_tol);
  report.m = static_cast<int>(report.inner_products.size());
  report.design_strength_needed = 2 * report.m - 1;
  if (report.m >= 1) {
    report.design = design_check(config, report.design_strength_needed, options);
    report.is_sharp = report.design.passed;
  }
  return report;
}

}  // namespace framepot

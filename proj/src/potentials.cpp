#include "framepot/potentials.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace framepot {

namespace {

void check_exponent(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("p must be positive, got " + std::to_string(p));
}

double power_term(double t, double p) {
  const double v = std::pow(std::abs(t), p);
  return v < kUnderflowFlush ? 0.0 : v;
}

}  // namespace

double fp_eval(const Configuration &config, double p) {
  check_exponent(p);
  if (std::isinf(p)) return coherence(config);
  const Matrix &x = config.synthesis();
  const Eigen::Index n = x.cols();
  // Row sums are accumulated in a fixed order, so the result is reproducible.
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double row = 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      row += power_term(x.col(i).dot(x.col(j)), p);
    }
    total += row;
  }
  return 2.0 * total;
}

double coherence(const Configuration &config) {
  const Matrix &x = config.synthesis();
  const Eigen::Index n = x.cols();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      worst = std::max(worst, std::abs(x.col(i).dot(x.col(j))));
    }
  }
  return std::min(worst, 1.0);
}

namespace {

struct EnergyVisitor {
  const Configuration &config;

  double operator()(const PFrameKernel &k) const { return fp_eval(config, k.p); }

  double operator()(const InnerSquareKernel &k) const {
    if (!k.g) throw std::invalid_argument("inner-square kernel has no function");
    const Matrix &x = config.synthesis();
    double total = 0.0;
    for (Eigen::Index i = 0; i < x.cols(); ++i) {
      for (Eigen::Index j = 0; j < x.cols(); ++j) {
        if (i == j) continue;
        const double t = x.col(i).dot(x.col(j));
        const double s = std::min(t * t, 1.0);
        if (!k.accepts_one && s >= 1.0 - 1e-15) {
          throw std::domain_error("inner-square kernel undefined at |<x,y>|^2 = 1 (pair " +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
        }
        total += k.g(s);
      }
    }
    return total;
  }

  double operator()(const ChordalKernel &k) const {
    if (!k.f) throw std::invalid_argument("chordal kernel has no function");
    const Matrix &x = config.synthesis();
    const double diameter_sq = 4.0 * k.radius * k.radius;
    double total = 0.0;
    for (Eigen::Index i = 0; i < x.cols(); ++i) {
      for (Eigen::Index j = 0; j < x.cols(); ++j) {
        if (i == j) continue;
        const double s = (x.col(i) - x.col(j)).squaredNorm();
        if (s > diameter_sq * (1.0 + 1e-12)) {
          throw std::domain_error("squared distance " + std::to_string(s) +
                                  " exceeds kernel domain (0, 4r^2]");
        }
        if (!k.accepts_zero && s <= 1e-24) {
          throw std::domain_error("chordal kernel undefined at coincident points (pair " +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
        }
        total += k.f(std::min(s, diameter_sq));
      }
    }
    return total;
  }
};

}  // namespace

EnergyValue kernel_energy(const Configuration &config, const KernelSpec &kernel) {
  return EnergyValue{std::visit(EnergyVisitor{config}, kernel), kernel};
}

double pfp_discrete(const Configuration &config, double p) {
  check_exponent(p);
  if (std::isinf(p)) throw std::invalid_argument("pfp_discrete needs finite p");
  const double n = static_cast<double>(config.size());
  return (fp_eval(config, p) + n) / (n * n);
}

}  // namespace framepot

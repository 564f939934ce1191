#pragma once

#include "framepot/core.hpp"

#include <functional>
#include <limits>
#include <variant>

namespace framepot {

// All energies sum over ordered pairs (i, j), i != j. This is twice the
// unordered-pair sum used in part of the literature.

/// |<x,y>|^p; p = +infinity selects the coherence.
struct PFrameKernel {
  double p = 2.0;
};

/// g(|<x,y>|^2) with g defined on [0, 1), or [0, 1] if accepts_one.
struct InnerSquareKernel {
  std::function<double(double)> g;
  bool accepts_one = true;
};

/// f(|x - y|^2) for points on a circle/sphere of radius r, with f defined on
/// (0, 4 r^2], or [0, 4 r^2] if accepts_zero.
struct ChordalKernel {
  std::function<double(double)> f;
  double radius = 1.0;
  bool accepts_zero = false;
};

using KernelSpec = std::variant<PFrameKernel, InnerSquareKernel, ChordalKernel>;

struct EnergyValue {
  double value = 0.0;
  KernelSpec kernel;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Magnitudes |<x,y>|^p below this are flushed to zero.
inline constexpr double kUnderflowFlush = 1e-300;

/// sum_{k != l} |<x_k, x_l>|^p. p = infinity routes to coherence().
/// Throws std::invalid_argument for p <= 0 or NaN.
double fp_eval(const Configuration &config, double p);

/// max_{k != l} |<x_k, x_l>|.
double coherence(const Configuration &config);

/// Ordered-pair energy for any KernelSpec. Throws std::domain_error when a
/// pairwise value falls outside the kernel's domain.
EnergyValue kernel_energy(const Configuration &config, const KernelSpec &kernel);

/// (FP_p + N) / N^2: the probabilistic p-frame potential of the normalized
/// counting measure of the configuration.
double pfp_discrete(const Configuration &config, double p);

}  // namespace framepot

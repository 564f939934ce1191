#pragma once

#include "framepot/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace framepot {

struct OptimizerSettings {
  int restarts = 50;
  int max_iters = 5000;
  double step_init = 0.1;
  double armijo_beta = 0.5;
  double armijo_c = 1e-4;
  double grad_tol = 1e-10;
  /// Replaces |t| by sqrt(t^2 + eps^2) when p < 1. Zero disables smoothing.
  double smoothing_eps = 0.0;
  /// |t| below this contributes no gradient (the zero subgradient).
  double zero_cut = 1e-12;
  /// Cap on |t|^{p-1} for p < 1.
  double cap_value = 1e8;
  /// After descent, pairs with |t| below this are pinned to exactly zero and
  /// the descent continues on the remaining terms; the result is kept only
  /// when it lowers the energy. Zero disables the pass.
  double pin_tol = 1e-4;
  /// Worker threads for independent restarts; 0 picks hardware concurrency.
  int threads = 0;
  std::uint64_t seed = 12345;

  void validate() const;
};

/// Euclidean gradient of FP_p with respect to each vector:
///   dFP/dx_i = 2 p sum_{j != i} |t_ij|^{p-1} sign(t_ij) x_j,  t_ij = <x_i, x_j>.
/// Returned as a d x N matrix (column i belongs to x_i).
Matrix fp_gradient(const Configuration &config, double p, const OptimizerSettings &settings = {});

struct OptimizationResult {
  Configuration best_config;
  double best_value = 0.0;
  std::vector<double> per_restart_values;  ///< NaN marks a discarded restart
  std::uint64_t seed = 0;
  int iterations_used = 0;                 ///< summed over restarts
  int best_restart = 0;
  /// Sorted distinct invariant digests of the restarts whose energy is within
  /// 1e-9 (relative) of the best. More than one entry means the runs found
  /// structurally different configurations at the same energy.
  std::vector<std::string> tied_invariant_digests;
};

/// Multi-start projected gradient descent with Armijo backtracking on the
/// product of spheres. Restart r starts from random_uniform(N, d,
/// derive_seed(seed, r)); the best value wins, ties (within 1e-12) going to the
/// lowest restart index. Deterministic for a given seed, independent of the
/// thread count.
OptimizationResult minimize(int n, int d, double p, const OptimizerSettings &settings);

/// One descent run (no restarts) from the given start.
OptimizationResult minimize_from(const Configuration &start, double p, const OptimizerSettings &settings);

/// Coherence minimisation through FP_p for an increasing p schedule, each
/// stage warm-started from the previous one; best_value is the coherence.
OptimizationResult minimize_coherence(int n, int d, const OptimizerSettings &settings,
                                      const std::vector<double> &schedule = {16, 32, 64, 128});

struct SweepRow {
  double p = 0.0;
  double value = 0.0;
  std::string invariant_digest;
  std::uint64_t seed = 0;
  CanonicalInvariant invariant;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

/// Minimises at each grid value. Row i uses master seed derive_seed(seed, i).
/// With warm_start, restart 0 at each p begins from the previous best.
SweepResult sweep(int n, int d, const std::vector<double> &p_grid, const OptimizerSettings &settings,
                  bool warm_start = false);

struct ConjectureTrial {
  double p = 0.0;
  double value = 0.0;
  double reference = 0.0;
  std::uint64_t seed = 0;
};

struct ConjectureReport {
  int d = 0;
  int k = 0;
  double p_min = 0.0;
  double p_max = 0.0;
  int trials = 0;
  int beat_count = 0;              ///< trials strictly below the L_k^d value
  int significant_beat_count = 0;  ///< trials below it by more than the threshold
  double significance = 1e-9;
  double max_gap = 0.0;            ///< largest reference - value among beats
  std::uint64_t seed = 0;
  std::vector<ConjectureTrial> trial_log;
};

/// Interval tested for L_k^d: [p_{k-1}, p_k], except [0.1, p_1] for k = 1 and
/// [p_{d-1}, 2] for k = d.
std::pair<double, double> conjecture_interval(int d, int k);

/// Fifty comparisons against FP_p(L_k^d): five descents from random frames at
/// p_min, five at p_max and forty at uniform random p in the interval. Each
/// trial is a single descent from a fresh random frame.
ConjectureReport conjecture_test(int d, int k, const OptimizerSettings &settings);

}  // namespace framepot

#include "framepot/optimizer.hpp"

#include "framepot/bounds.hpp"
#include "framepot/constructions.hpp"
#include "framepot/potentials.hpp"
#include "framepot/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <thread>

namespace framepot {

void OptimizerSettings::validate() const {
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  if (!(step_init > 0.0)) throw std::invalid_argument("step_init must be positive");
  if (!(armijo_beta > 0.0 && armijo_beta < 1.0)) throw std::invalid_argument("armijo_beta must lie in (0, 1)");
  if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw std::invalid_argument("armijo_c must lie in (0, 1)");
  if (grad_tol < 0.0 || smoothing_eps < 0.0 || zero_cut < 0.0 || pin_tol < 0.0) {
    throw std::invalid_argument("tolerances must be nonnegative");
  }
  if (!(cap_value > 0.0)) throw std::invalid_argument("cap_value must be positive");
  if (threads < 0) throw std::invalid_argument("threads must be nonnegative");
}

namespace {

void check_problem(int n, int d, double p) {
  if (n < 2 || d < 2) throw std::invalid_argument("need N >= 2 and d >= 2");
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("need finite p > 0");
}

void normalize_columns(Matrix &x) {
  for (Eigen::Index j = 0; j < x.cols(); ++j) x.col(j).normalize();
}

using PairMask = std::vector<std::vector<bool>>;

// Energy and Euclidean gradient of the ordered-pair p-frame potential,
// skipping pinned pairs. Smoothing (p < 1 only) replaces |t| with
// sqrt(t^2 + eps^2).
class Objective {
 public:
  Objective(double p, const OptimizerSettings &s, const PairMask *pinned, bool log_scale)
      : p_(p), s_(s), pinned_(pinned), log_scale_(log_scale) {}

  double value(const Matrix &x) const {
    double total = 0.0;
    for (Eigen::Index i = 0; i < x.cols(); ++i) {
      for (Eigen::Index j = i + 1; j < x.cols(); ++j) {
        if (is_pinned(i, j)) continue;
        const double v = std::pow(magnitude(x.col(i).dot(x.col(j))), p_);
        if (v >= kUnderflowFlush) total += 2.0 * v;
      }
    }
    return log_scale_ ? std::log(total) : total;
  }

  Matrix gradient(const Matrix &x) const {
    Matrix g = Matrix::Zero(x.rows(), x.cols());
    double raw = 0.0;
    for (Eigen::Index i = 0; i < x.cols(); ++i) {
      for (Eigen::Index j = i + 1; j < x.cols(); ++j) {
        if (is_pinned(i, j)) continue;
        const double t = x.col(i).dot(x.col(j));
        if (log_scale_) {
          const double v = std::pow(magnitude(t), p_);
          if (v >= kUnderflowFlush) raw += 2.0 * v;
        }
        const double w = weight(t);
        if (w == 0.0) continue;
        g.col(i) += w * x.col(j);
        g.col(j) += w * x.col(i);
      }
    }
    if (log_scale_ && raw > 0.0) g /= raw;
    return g;
  }

 private:
  bool is_pinned(Eigen::Index i, Eigen::Index j) const {
    return pinned_ != nullptr && (*pinned_)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  bool smoothed() const { return p_ < 1.0 && s_.smoothing_eps > 0.0; }

  double magnitude(double t) const {
    return smoothed() ? std::sqrt(t * t + s_.smoothing_eps * s_.smoothing_eps) : std::abs(t);
  }

  // d/dt of |t|^p, times 2 for the ordered-pair count.
  double weight(double t) const {
    if (smoothed()) {
      const double m = magnitude(t);
      return 2.0 * p_ * std::pow(m, p_ - 2.0) * t;
    }
    const double a = std::abs(t);
    if (a < s_.zero_cut) return 0.0;
    double factor = std::pow(a, p_ - 1.0);
    if (p_ < 1.0) factor = std::min(factor, s_.cap_value);
    return 2.0 * p_ * factor * (t < 0.0 ? -1.0 : 1.0);
  }

  double p_;
  const OptimizerSettings &s_;
  const PairMask *pinned_;
  bool log_scale_;
};

// Drives the pinned inner products to zero by alternating pairwise
// projections. Returns false when it fails to converge.
bool restore_pins(Matrix &x, const std::vector<std::pair<Eigen::Index, Eigen::Index>> &pins) {
  for (int sweep = 0; sweep < 200; ++sweep) {
    double worst = 0.0;
    for (const auto &[i, j] : pins) {
      const double t = x.col(i).dot(x.col(j));
      worst = std::max(worst, std::abs(t));
      const Vector xi = x.col(i);
      x.col(i) -= 0.5 * t * x.col(j);
      x.col(j) -= 0.5 * t * xi;
      x.col(i).normalize();
      x.col(j).normalize();
    }
    if (worst < 1e-15) return true;
  }
  return false;
}

struct DescentOutcome {
  int iterations = 0;
  bool finite = true;
};

DescentOutcome descend(Matrix &x, double p, const OptimizerSettings &s, const PairMask *pinned,
                       const std::vector<std::pair<Eigen::Index, Eigen::Index>> &pins, bool log_scale) {
  const Objective objective(p, s, pinned, log_scale);
  DescentOutcome out;
  double f = objective.value(x);
  if (!std::isfinite(f)) {
    out.finite = log_scale && f == -std::numeric_limits<double>::infinity();
    return out;
  }
  double alpha = s.step_init;
  int stagnant = 0;
  Matrix trial(x.rows(), x.cols());
  for (int it = 0; it < s.max_iters; ++it) {
    out.iterations = it + 1;
    const Matrix g = objective.gradient(x);
    // Riemannian gradient: remove the radial component of each column.
    const Eigen::RowVectorXd radial = (g.array() * x.array()).colwise().sum();
    const Matrix rg = g - x * radial.asDiagonal();
    const double g2 = rg.squaredNorm();
    if (!std::isfinite(g2)) {
      out.finite = false;
      return out;
    }
    if (std::sqrt(g2) <= s.grad_tol) break;

    bool accepted = false;
    double fn = f;
    while (alpha > 1e-300) {
      trial = x - alpha * rg;
      normalize_columns(trial);
      if (!pins.empty()) restore_pins(trial, pins);
      fn = objective.value(trial);
      if (std::isfinite(fn) && fn <= f - s.armijo_c * alpha * g2) {
        accepted = true;
        break;
      }
      if (log_scale && fn == -std::numeric_limits<double>::infinity()) {
        accepted = true;
        break;
      }
      alpha *= s.armijo_beta;
    }
    if (!accepted) break;
    x.swap(trial);
    const double decrease = f - fn;
    f = fn;
    if (!std::isfinite(f)) break;
    stagnant = decrease <= 1e-15 * (1.0 + std::abs(f)) ? stagnant + 1 : 0;
    if (stagnant >= 50) break;
    alpha /= s.armijo_beta;
  }
  return out;
}

double exact_energy(const Matrix &x, double p) {
  Matrix y = x;
  normalize_columns(y);
  return fp_eval(Configuration(std::move(y)), p);
}

// Full descent followed by the pinning pass.
DescentOutcome run_descent(Matrix &x, double p, const OptimizerSettings &s, bool log_scale) {
  DescentOutcome total = descend(x, p, s, nullptr, {}, log_scale);
  if (!total.finite || s.pin_tol <= 0.0) return total;
  double best = exact_energy(x, p);
  for (int round = 0; round < 3; ++round) {
    const Eigen::Index n = x.cols();
    PairMask mask(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<std::pair<Eigen::Index, Eigen::Index>> pins;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (std::abs(x.col(i).dot(x.col(j))) < s.pin_tol) {
          mask[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
          pins.emplace_back(i, j);
        }
      }
    }
    if (pins.empty()) break;
    Matrix candidate = x;
    if (!restore_pins(candidate, pins)) break;
    const DescentOutcome pinned = descend(candidate, p, s, &mask, pins, log_scale);
    total.iterations += pinned.iterations;
    if (!pinned.finite) break;
    const double value = exact_energy(candidate, p);
    if (!(value < best)) break;
    best = value;
    x.swap(candidate);
  }
  return total;
}

unsigned worker_count(const OptimizerSettings &s, std::size_t jobs) {
  unsigned t = s.threads > 0 ? static_cast<unsigned>(s.threads) : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, jobs));
}

// Runs job(i) for i in [0, count) on a small pool. Jobs write disjoint slots.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)> &job) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) job(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto &t : pool) t.join();
  for (auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct RestartOutcome {
  std::optional<Matrix> x;
  double value = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
};

OptimizationResult reduce_restarts(std::vector<RestartOutcome> &outcomes, std::uint64_t seed) {
  int best = -1;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    if (!outcomes[r].x) continue;
    if (best < 0 || outcomes[r].value < outcomes[static_cast<std::size_t>(best)].value - 1e-12) {
      best = static_cast<int>(r);
    }
  }
  if (best < 0) throw std::runtime_error("every restart produced a non-finite energy");
  std::vector<double> values;
  int iterations = 0;
  for (const auto &o : outcomes) {
    values.push_back(o.value);
    iterations += o.iterations;
  }
  auto &winner = outcomes[static_cast<std::size_t>(best)];
  const double tie = 1e-9 * std::max(1.0, std::abs(winner.value));
  std::vector<std::string> digests;
  for (const auto &o : outcomes) {
    if (o.x && o.value <= winner.value + tie) {
      digests.push_back(invariant_digest(canonical_invariant(Configuration(*o.x))));
    }
  }
  std::sort(digests.begin(), digests.end());
  digests.erase(std::unique(digests.begin(), digests.end()), digests.end());
  return OptimizationResult{Configuration(std::move(*winner.x)), winner.value, std::move(values), seed,
                            iterations, best, std::move(digests)};
}

OptimizationResult minimize_impl(int n, int d, double p, const OptimizerSettings &settings,
                                 const std::optional<Configuration> &warm) {
  settings.validate();
  check_problem(n, d, p);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(settings.restarts));
  parallel_for(outcomes.size(), worker_count(settings, outcomes.size()), [&](std::size_t r) {
    Matrix x = (r == 0 && warm) ? warm->synthesis()
                                : random_uniform(n, d, derive_seed(settings.seed, r)).synthesis();
    const DescentOutcome o = run_descent(x, p, settings, false);
    const double value = o.finite ? exact_energy(x, p) : std::numeric_limits<double>::quiet_NaN();
    if (!std::isfinite(value)) {
      std::clog << "framepot: restart " << r << " discarded (non-finite energy)\n";
      outcomes[r].iterations = o.iterations;
      return;
    }
    normalize_columns(x);
    outcomes[r] = RestartOutcome{std::move(x), value, o.iterations};
  });
  return reduce_restarts(outcomes, settings.seed);
}

}  // namespace

Matrix fp_gradient(const Configuration &config, double p, const OptimizerSettings &settings) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("fp_gradient needs finite p > 0");
  return Objective(p, settings, nullptr, false).gradient(config.synthesis());
}

OptimizationResult minimize(int n, int d, double p, const OptimizerSettings &settings) {
  return minimize_impl(n, d, p, settings, std::nullopt);
}

OptimizationResult minimize_from(const Configuration &start, double p, const OptimizerSettings &settings) {
  settings.validate();
  check_problem(static_cast<int>(start.size()), static_cast<int>(start.dim()), p);
  Matrix x = start.synthesis();
  const DescentOutcome o = run_descent(x, p, settings, false);
  if (!o.finite) throw std::runtime_error("descent produced a non-finite energy");
  normalize_columns(x);
  Configuration best(std::move(x));
  const double value = fp_eval(best, p);
  std::vector<std::string> digest{invariant_digest(canonical_invariant(best))};
  return OptimizationResult{std::move(best), value, {value}, settings.seed, o.iterations, 0, std::move(digest)};
}

OptimizationResult minimize_coherence(int n, int d, const OptimizerSettings &settings,
                                      const std::vector<double> &schedule) {
  settings.validate();
  if (n < 2 || d < 2) throw std::invalid_argument("need N >= 2 and d >= 2");
  if (schedule.empty()) throw std::invalid_argument("p schedule must not be empty");
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(settings.restarts));
  parallel_for(outcomes.size(), worker_count(settings, outcomes.size()), [&](std::size_t r) {
    Matrix x = random_uniform(n, d, derive_seed(settings.seed, r)).synthesis();
    int iterations = 0;
    for (double p : schedule) {
      check_problem(n, d, p);
      // FP_p itself underflows at large p; its logarithm stays well scaled.
      const DescentOutcome o = run_descent(x, p, settings, true);
      iterations += o.iterations;
      if (!o.finite) {
        std::clog << "framepot: restart " << r << " discarded (non-finite energy)\n";
        outcomes[r].iterations = iterations;
        return;
      }
    }
    normalize_columns(x);
    const double c = coherence(Configuration(x));
    outcomes[r] = RestartOutcome{std::move(x), c, iterations};
  });
  return reduce_restarts(outcomes, settings.seed);
}

SweepResult sweep(int n, int d, const std::vector<double> &p_grid, const OptimizerSettings &settings,
                  bool warm_start) {
  if (p_grid.empty()) throw std::invalid_argument("sweep grid must not be empty");
  for (std::size_t i = 1; i < p_grid.size(); ++i) {
    if (!(p_grid[i] > p_grid[i - 1])) throw std::invalid_argument("sweep grid must be strictly increasing");
  }
  SweepResult result;
  std::optional<Configuration> previous;
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    OptimizerSettings s = settings;
    s.seed = derive_seed(settings.seed, i);
    OptimizationResult r = minimize_impl(n, d, p_grid[i], s, warm_start ? previous : std::nullopt);
    SweepRow row;
    row.p = p_grid[i];
    row.value = r.best_value;
    row.invariant = canonical_invariant(r.best_config);
    row.invariant_digest = invariant_digest(row.invariant);
    row.seed = s.seed;
    result.rows.push_back(std::move(row));
    previous = std::move(r.best_config);
  }
  return result;
}

std::pair<double, double> conjecture_interval(int d, int k) {
  if (d < 2) throw std::invalid_argument("conjecture needs d >= 2");
  if (k < 1 || k > d) throw std::invalid_argument("conjecture needs 1 <= k <= d");
  if (k == 1) return {0.1, switching_point(1)};
  if (k == d) return {switching_point(d - 1), 2.0};
  return {switching_point(k - 1), switching_point(k)};
}

ConjectureReport conjecture_test(int d, int k, const OptimizerSettings &settings) {
  settings.validate();
  const auto [p_min, p_max] = conjecture_interval(d, k);
  constexpr int kTrials = 50;

  ConjectureReport report;
  report.d = d;
  report.k = k;
  report.p_min = p_min;
  report.p_max = p_max;
  report.trials = kTrials;
  report.seed = settings.seed;

  Rng p_stream(derive_seed(settings.seed, kTrials));
  std::vector<ConjectureTrial> trials(kTrials);
  for (int i = 0; i < kTrials; ++i) {
    auto &t = trials[static_cast<std::size_t>(i)];
    t.p = i < 5 ? p_min : (i < 10 ? p_max : p_stream.uniform(p_min, p_max));
    t.seed = derive_seed(settings.seed, static_cast<std::uint64_t>(i));
    t.reference = lifted_etf_value(k, t.p);
  }
  OptimizerSettings single = settings;
  single.restarts = 1;
  single.threads = 1;
  parallel_for(trials.size(), worker_count(settings, trials.size()), [&](std::size_t i) {
    auto &t = trials[i];
    OptimizerSettings local = single;
    local.seed = t.seed;
    t.value = minimize_from(random_uniform(d + 1, d, t.seed), t.p, local).best_value;
  });

  for (const auto &t : trials) {
    if (t.value < t.reference) {
      ++report.beat_count;
      const double gap = t.reference - t.value;
      report.max_gap = std::max(report.max_gap, gap);
      if (gap > report.significance) ++report.significant_beat_count;
    }
  }
  report.trial_log = std::move(trials);
  return report;
}

}  // namespace framepot

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace framepot {

/// Replayable random stream: std::mt19937_64 (bit-exact by the standard) with
/// uniform and Gaussian draws derived from its raw output, so experiments
/// replay identically across standard library implementations.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/box-muller/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Seed for the i-th child stream of a master seed (splitmix64 finalizer of
/// master + (i + 1) * golden-ratio increment).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace framepot

#pragma once

#include "framepot/core.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace framepot {

/// N equally spaced lines on the half circle: (cos(k pi/N), sin(k pi/N)),
/// k = 0..N-1. Grassmannian frame in R^2.
Configuration half_circle(int n);

/// k stacked copies of the canonical basis of R^d (N = k d).
Configuration onb_copies(int d, int k);

/// Canonical basis of R^d followed by a second copy of e_1 (N = d + 1).
Configuration onb_plus(int d);

/// n + 1 unit vectors in R^n with all pairwise inner products -1/n, obtained
/// by projecting the canonical basis of R^{n+1} onto the complement of the
/// all-ones vector and expressing the result in an orthonormal basis of that
/// complement.
Configuration simplex(int n);

/// d + 1 vectors in R^d: simplex(k) in the first k coordinates followed by
/// e_{k+1}, ..., e_d. k = 1 matches ONB+ up to a sign, k = d is the simplex.
Configuration lifted_etf(int d, int k);

/// X followed by -X. Rejects configurations with coherence 1, where the
/// doubling identity FP(X^sym) = 4 FP(X) + 2N would fail.
Configuration symmetrize(const Configuration &config);

/// N i.i.d. uniform points on S^{d-1} (normalized Gaussians), reproducible
/// from the seed; see Rng::kAlgorithm.
Configuration random_uniform(int n, int d, std::uint64_t seed);

enum class NamedKind { HalfCircle, OnbCopies, OnbPlus, Simplex, LiftedEtf, RandomUniform };

struct NamedConfig {
  NamedKind kind;
  int n = 0;
  int d = 0;
  int k = 0;
  std::uint64_t seed = 0;
};

NamedKind parse_named_kind(std::string_view name);
std::string_view to_string(NamedKind kind);
Configuration construct(const NamedConfig &spec);

}  // namespace framepot

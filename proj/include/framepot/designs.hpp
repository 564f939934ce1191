#pragma once

#include "framepot/core.hpp"

#include <cstddef>
#include <vector>

namespace framepot {

/// Average of x^alpha over the unit sphere S^{d-1} (normalized measure), with
/// d = alpha.size(): zero if any exponent is odd, otherwise
/// prod (alpha_i - 1)!! / (d (d+2) ... (d + |alpha| - 2)).
double sphere_moment(const std::vector<int> &alpha);

struct DesignReport {
  int max_strength = 0;         ///< largest t' <= requested t that passes
  double worst_residual = 0.0;  ///< max over monomials of degree <= t
  bool passed = false;          ///< max_strength == requested t
};

struct DesignCheckOptions {
  double tol = 1e-10;
  std::size_t monomial_cap = 1'000'000;
};

/// Compares the sample average of every monomial of total degree <= t with
/// its sphere moment. Throws std::invalid_argument for t < 1 or when the
/// monomial count exceeds the cap.
DesignReport design_check(const Configuration &config, int t,
                          const DesignCheckOptions &options = {});

/// Distinct values of <x_i, x_j> over pairs of distinct points (i < j, pairs
/// with inner product within `cluster_tol` of 1 skipped), clustered by
/// splitting the sorted list at gaps larger than `cluster_tol`. Each cluster
/// is reported by its mean.
std::vector<double> distinct_inner_products(const Configuration &config, double cluster_tol = 1e-7);

struct SharpReport {
  bool is_sharp = false;
  int m = 0;                             ///< number of distinct inner products
  std::vector<double> inner_products;    ///< cluster centres, increasing
  int design_strength_needed = 0;        ///< 2m - 1
  DesignReport design;
};

/// Clusters the inner products between distinct points (sorted-gap split at
/// `cluster_tol`), then checks for a (2m-1)-design.
SharpReport sharp_check(const Configuration &config, double cluster_tol = 1e-7,
                        const DesignCheckOptions &options = {});

}  // namespace framepot

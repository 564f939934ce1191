#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace framepot {

enum class BoundKind { Welch, SphericalDesign, LiftedEtfValue, LpCertificate };

std::string to_string(BoundKind kind);

struct BoundReport {
  double value = 0.0;
  BoundKind kind = BoundKind::Welch;
  std::string applicability;
};

/// Lower bound on the coherence of N unit vectors in R^d:
/// sqrt((N - d) / (d (N - 1))), and 0 when N <= d.
BoundReport welch_bound(int n, int d);

/// For even p >= 2:
///   FP_p(X) >= N^2 (1*3*...*(p-1)) / (d (d+2) ... (d+p-2)) - N,
/// with equality iff X u (-X) is a spherical p-design.
BoundReport design_bound(int n, int d, int p);

/// (1*3*...*(p-1)) / (d (d+2) ... (d+p-2)) for even p: the sphere average of
/// <x, e>^p. Evaluated as a running product of ratios.
double even_power_sphere_average(int d, int p);

/// FP_p of the lifted ETF L_k^d: (k+1) k (1/k)^p, independent of d.
double lifted_etf_value(int k, double p);

/// Exponent where L_k^d and L_{k+1}^d have equal p-frame potential:
/// (log(k+2) - log k) / (log(k+1) - log k). switching_point(0) = 0.
double switching_point(int k);

/// F_N / (N (N - 1)) for each (N, F_N) pair, in input order.
std::vector<double> fekete_ratio(const std::vector<std::pair<int, double>> &values);

/// lim F_{p,N,d} / N^2 where known: 1/d for p <= 2, and
/// (1*3*...*(p-1)) / (2*4*...*p) for d = 2 and even p. Empty otherwise.
std::optional<double> tau_reference(int d, double p);

}  // namespace framepot

#include "framepot/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace framepot {

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Welch: return "welch";
    case BoundKind::SphericalDesign: return "spherical_design";
    case BoundKind::LiftedEtfValue: return "lifted_etf_value";
    case BoundKind::LpCertificate: return "lp_certificate";
  }
  return "unknown";
}

BoundReport welch_bound(int n, int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("welch_bound needs N >= 2 and d >= 2");
  if (n <= d) {
    return {0.0, BoundKind::Welch, "N <= d: attained by orthonormal vectors"};
  }
  const double value = std::sqrt(static_cast<double>(n - d) / (static_cast<double>(d) * (n - 1)));
  const bool etf_possible = 2 * n <= d * (d + 1);
  return {value, BoundKind::Welch,
          etf_possible ? "equality iff ETF, only possible if N <= d(d+1)/2"
                       : "strict: N > d(d+1)/2 so no ETF exists"};
}

double even_power_sphere_average(int d, int p) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (p < 0 || p % 2 != 0) throw std::invalid_argument("p must be a nonnegative even integer");
  double ratio = 1.0;
  for (int j = 1; j < p; j += 2) {
    ratio *= static_cast<double>(j) / (d + j - 1);
  }
  return ratio;
}

BoundReport design_bound(int n, int d, int p) {
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("design_bound needs an even p >= 2");
  if (n < 2 || d < 2) throw std::invalid_argument("design_bound needs N >= 2 and d >= 2");
  const double nn = static_cast<double>(n);
  const double value = nn * nn * even_power_sphere_average(d, p) - nn;
  return {value, BoundKind::SphericalDesign, "equality iff X^sym is a spherical p-design"};
}

double lifted_etf_value(int k, double p) {
  if (k < 1) throw std::invalid_argument("lifted_etf_value needs k >= 1");
  if (!(p > 0.0)) throw std::invalid_argument("lifted_etf_value needs p > 0");
  return (k + 1.0) * k * std::pow(1.0 / k, p);
}

double switching_point(int k) {
  if (k < 0) throw std::invalid_argument("switching_point needs k >= 0");
  if (k == 0) return 0.0;
  const double kk = static_cast<double>(k);
  return (std::log(kk + 2.0) - std::log(kk)) / std::log1p(1.0 / kk);
}

std::vector<double> fekete_ratio(const std::vector<std::pair<int, double>> &values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto &[n, f] : values) {
    if (n < 2) throw std::invalid_argument("fekete_ratio needs N >= 2");
    out.push_back(f / (static_cast<double>(n) * (n - 1)));
  }
  return out;
}

std::optional<double> tau_reference(int d, double p) {
  if (d < 2 || !(p > 0.0)) return std::nullopt;
  if (p <= 2.0) return 1.0 / d;
  if (d == 2 && std::isfinite(p) && std::floor(p) == p && static_cast<long>(p) % 2 == 0) {
    return even_power_sphere_average(2, static_cast<int>(p));
  }
  return std::nullopt;
}

}  // namespace framepot

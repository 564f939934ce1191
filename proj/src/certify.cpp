#include "framepot/certify.hpp"

#include "framepot/constructions.hpp"
#include "framepot/core.hpp"
#include "framepot/designs.hpp"
#include "framepot/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace framepot {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<double> &roots) {
  Polynomial p = constant(1.0);
  for (double r : roots) p = p * Polynomial({-r, 1.0});
  return p;
}

double Polynomial::coeff(int k) const {
  return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(k)] : 0.0;
}

double Polynomial::operator()(double t) const {
  double v = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
  return v;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial &a, const Polynomial &b) {
  std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial &a, const Polynomial &b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial &a) {
  std::vector<double> c = a.coeffs_;
  for (double &v : c) v *= s;
  return Polynomial(std::move(c));
}

SmoothFunction SmoothFunction::from_polynomial(const Polynomial &p) {
  // Precompute the derivative chain once; orders past the degree are zero.
  std::vector<Polynomial> chain{p};
  while (chain.back().degree() > 0) chain.push_back(chain.back().derivative());
  return {[chain](double t, int k) {
            return k < static_cast<int>(chain.size()) ? chain[static_cast<std::size_t>(k)](t) : 0.0;
          },
          -1};
}

// ------------------------------------------------------------------- NodeSet

NodeSet::NodeSet(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw std::invalid_argument("node set must not be empty");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].multiplicity < 1) throw std::invalid_argument("node multiplicity must be positive");
    if (!std::isfinite(nodes_[i].t)) throw std::invalid_argument("node must be finite");
    if (i > 0 && !(nodes_[i].t > nodes_[i - 1].t)) {
      throw std::invalid_argument("nodes must be strictly increasing");
    }
  }
}

NodeSet NodeSet::doubled(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::vector<Node> nodes;
  nodes.reserve(values.size());
  for (double v : values) nodes.push_back({v, 2});
  return NodeSet(std::move(nodes));
}

int NodeSet::total_degree() const {
  int total = 0;
  for (const auto &n : nodes_) total += n.multiplicity;
  return total;
}

std::vector<double> NodeSet::points() const {
  std::vector<double> out;
  for (const auto &n : nodes_) out.insert(out.end(), static_cast<std::size_t>(n.multiplicity), n.t);
  return out;
}

Polynomial NodeSet::polynomial() const { return Polynomial::from_roots(points()); }

// --------------------------------------------------------- divided differences

namespace {

double checked_derivative(const SmoothFunction &a, double t, int order) {
  if (a.max_order >= 0 && order > a.max_order) {
    throw std::domain_error("derivative of order " + std::to_string(order) +
                            " unavailable (max " + std::to_string(a.max_order) + ")");
  }
  const double v = a.derivative(t, order);
  if (!std::isfinite(v)) {
    throw std::domain_error("derivative of order " + std::to_string(order) + " is not finite at t = " +
                            std::to_string(t));
  }
  return v;
}

// Newton coefficients a[z_0], a[z_0,z_1], ..., a[z_0..z_{n-1}] for sorted
// points. Equal points must be adjacent and bit-identical.
std::vector<long double> newton_coefficients(const SmoothFunction &a, const std::vector<double> &z) {
  const std::size_t n = z.size();
  std::vector<long double> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = checked_derivative(a, z[i], 0);
  long double factorial = 1.0L;
  for (std::size_t level = 1; level < n; ++level) {
    factorial *= static_cast<long double>(level);
    for (std::size_t i = n - 1; i >= level; --i) {
      if (z[i] == z[i - level]) {
        f[i] = checked_derivative(a, z[i], static_cast<int>(level)) / factorial;
      } else {
        f[i] = (f[i] - f[i - 1]) / (static_cast<long double>(z[i]) - z[i - level]);
      }
    }
  }
  return f;
}

// Points within this relative distance of a node are evaluated at the node.
constexpr double kSnap = 1e-13;

double snap_to(double t, const std::vector<double> &nodes) {
  for (double z : nodes) {
    if (std::abs(t - z) <= kSnap * std::max(1.0, std::abs(z))) return z;
  }
  return t;
}

}  // namespace

double divided_difference(const SmoothFunction &a, std::vector<double> points) {
  if (points.empty()) throw std::invalid_argument("divided difference of no points");
  std::sort(points.begin(), points.end());
  return static_cast<double>(newton_coefficients(a, points).back());
}

Polynomial hermite_interpolant(const SmoothFunction &a, const NodeSet &g) {
  const std::vector<double> z = g.points();
  const auto c = newton_coefficients(a, z);
  // Horner on the Newton form: P = c_{n-1}; P = P (t - z_k) + c_k.
  Polynomial p = Polynomial::constant(static_cast<double>(c.back()));
  for (std::size_t k = z.size() - 1; k-- > 0;) {
    p = p * Polynomial({-z[k], 1.0}) + Polynomial::constant(static_cast<double>(c[k]));
  }
  return p;
}

SmoothFunction hermite_quotient(const SmoothFunction &a, const NodeSet &g) {
  const std::vector<double> z = g.points();
  std::vector<double> distinct;
  for (const auto &n : g.nodes()) distinct.push_back(n.t);
  const int deg = g.total_degree();
  SmoothFunction q;
  q.max_order = a.max_order < 0 ? -1 : std::max(-1, a.max_order - deg);
  if (a.max_order >= 0 && a.max_order < deg) {
    throw std::domain_error("hermite_quotient needs derivatives up to order " + std::to_string(deg));
  }
  q.derivative = [a, z, distinct](double t, int k) {
    std::vector<double> points = z;
    points.insert(points.end(), static_cast<std::size_t>(k) + 1, snap_to(t, distinct));
    double factorial = 1.0;
    for (int j = 2; j <= k; ++j) factorial *= j;
    return factorial * divided_difference(a, std::move(points));
  };
  return q;
}

// ---------------------------------------------------------------- Gegenbauer

Polynomial gegenbauer_polynomial(int k, int d) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  Polynomial prev = Polynomial::constant(1.0);
  if (k == 0) return prev;
  Polynomial cur({0.0, 1.0});
  const Polynomial t({0.0, 1.0});
  // G_{j+1} = ((2j + d - 2) t G_j - j G_{j-1}) / (j + d - 2)
  for (int j = 1; j < k; ++j) {
    Polynomial next = (1.0 / (j + d - 2)) * (static_cast<double>(2 * j + d - 2) * (t * cur) -
                                             static_cast<double>(j) * prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<double> gegenbauer_expand(const Polynomial &h, int d) {
  const int n = h.degree();
  if (n < 0) return {};
  std::vector<Polynomial> basis;
  basis.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) basis.push_back(gegenbauer_polynomial(k, d));
  // Upper triangular in the monomial basis: peel off the top degree first.
  std::vector<long double> rest(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) rest[static_cast<std::size_t>(k)] = h.coeff(k);
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = n; k >= 0; --k) {
    const auto &b = basis[static_cast<std::size_t>(k)];
    const long double ck = rest[static_cast<std::size_t>(k)] / b.coeff(k);
    c[static_cast<std::size_t>(k)] = static_cast<double>(ck);
    for (int j = 0; j <= k; ++j) rest[static_cast<std::size_t>(j)] -= ck * b.coeff(j);
  }
  return c;
}

// --------------------------------------------------------------- certificates

Certificate lp_certify(const SmoothFunction &a, int n, int d, const NodeSet &g,
                       const CertifyOptions &options) {
  if (n < 2) throw std::invalid_argument("lp_certify needs N >= 2");
  if (d < 2) throw std::invalid_argument("lp_certify needs d >= 2");
  if (options.grid_points < 2) throw std::invalid_argument("grid needs at least 2 points");
  for (const auto &node : g.nodes()) {
    if (node.t < -1.0 || node.t >= 1.0) throw std::invalid_argument("nodes must lie in [-1, 1)");
  }

  Certificate cert;
  cert.dim = d;
  cert.n = n;
  for (const auto &node : g.nodes()) cert.nodes.push_back(node.t);
  cert.interpolant = hermite_interpolant(a, g);
  const Polynomial &h = cert.interpolant;

  std::vector<double> checks;
  const double hi = 1.0 - options.delta;
  checks.reserve(static_cast<std::size_t>(options.grid_points) + 8 * cert.nodes.size());
  for (int i = 0; i < options.grid_points; ++i) {
    checks.push_back(-1.0 + (hi + 1.0) * i / (options.grid_points - 1));
  }
  // h - a has double roots at the nodes; sample around them as well.
  for (double t : cert.nodes) {
    checks.push_back(t);
    for (double off : {1e-6, 1e-4, 1e-3, 1e-2}) {
      if (t - off >= -1.0) checks.push_back(t - off);
      if (t + off <= hi) checks.push_back(t + off);
    }
  }
  cert.pointwise_ok = true;
  cert.min_slack = std::numeric_limits<double>::infinity();
  for (double t : checks) {
    const double av = a(t);
    const double slack = av - h(t);
    cert.min_slack = std::min(cert.min_slack, slack);
    if (slack < -options.pointwise_tol * std::max(1.0, std::abs(av)) && cert.pointwise_ok) {
      cert.pointwise_ok = false;
      cert.witness = t;
    }
  }

  cert.expansion_coeffs = gegenbauer_expand(h, d);
  cert.pd_ok = true;
  for (std::size_t k = 0; k < cert.expansion_coeffs.size(); ++k) {
    if (cert.expansion_coeffs[k] < -options.pd_tol) {
      cert.pd_ok = false;
      cert.offending_index = static_cast<int>(k);
      break;
    }
  }
  const double c0 = cert.expansion_coeffs.empty() ? 0.0 : cert.expansion_coeffs.front();
  const double nn = static_cast<double>(n);
  cert.lower_bound = nn * nn * c0 - nn * h(1.0);
  return cert;
}

namespace {

double falling_factorial(double x, int k) {
  double v = 1.0;
  for (int j = 0; j < k; ++j) v *= (x - j);
  return v;
}

bool is_even_integer(double p) { return std::floor(p) == p && std::fmod(p, 2.0) == 0.0; }

}  // namespace

SmoothFunction transported_power_kernel(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("kernel exponent must be positive");
  const double e = p / 2.0;
  const bool polynomial = std::floor(e) == e;
  return {[e, polynomial](double u, int k) {
            if (polynomial && k > static_cast<int>(e)) return 0.0;
            const double base = (1.0 + u) / 2.0;
            return falling_factorial(e, k) * std::pow(0.5, k) * std::pow(std::max(base, 0.0), e - k);
          },
          -1};
}

SmoothFunction inner_power_kernel(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("kernel exponent must be positive");
  const bool even = is_even_integer(p);
  return {[p, even](double t, int k) {
            if (even) {
              if (k > static_cast<int>(p)) return 0.0;
              return falling_factorial(p, k) * std::pow(t, p - k);
            }
            const double sign = (t < 0.0 && k % 2 == 1) ? -1.0 : 1.0;
            return sign * falling_factorial(p, k) * std::pow(std::abs(t), p - k);
          },
          -1};
}

HalfCircleCertificate certify_half_circle(int n, double p, const CertifyOptions &options) {
  if (n < 4) throw std::invalid_argument("certify_half_circle needs N >= 4");
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("certify_half_circle needs finite p > 0");
  const Configuration candidate = half_circle(n);
  const auto u_values = distinct_inner_products(projective_circle(candidate), 1e-9);

  HalfCircleCertificate out;
  out.certificate = lp_certify(transported_power_kernel(p), n, 2, NodeSet::doubled(u_values), options);
  out.achieved = fp_eval(candidate, p);
  out.gap = out.achieved - out.certificate.lower_bound;
  return out;
}

}  // namespace framepot

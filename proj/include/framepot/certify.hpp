#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace framepot {

/// Real polynomial in the monomial basis, coefficients in ascending degree.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial constant(double c) { return Polynomial({c}); }
  /// prod (t - r_i) over the given roots.
  static Polynomial from_roots(const std::vector<double> &roots);

  const std::vector<double> &coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double coeff(int k) const;

  double operator()(double t) const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(double s, const Polynomial &a);

 private:
  void trim();
  std::vector<double> coeffs_;
};

/// Function with derivatives on demand: derivative(t, k) = a^{(k)}(t).
/// max_order < 0 means derivatives of every order are available.
struct SmoothFunction {
  std::function<double(double, int)> derivative;
  int max_order = -1;

  double operator()(double t) const { return derivative(t, 0); }
  static SmoothFunction from_polynomial(const Polynomial &p);
};

struct Node {
  double t = 0.0;
  int multiplicity = 1;
};

/// Roots of the monic polynomial g = prod (t - t_i)^{m_i}; nodes strictly
/// increasing with positive multiplicities.
class NodeSet {
 public:
  explicit NodeSet(std::vector<Node> nodes);
  /// Every value with multiplicity 2 (g = F^2 with F = prod (t - t_i)).
  static NodeSet doubled(std::vector<double> values);

  const std::vector<Node> &nodes() const { return nodes_; }
  int total_degree() const;
  /// Roots repeated by multiplicity, nondecreasing.
  std::vector<double> points() const;
  Polynomial polynomial() const;

 private:
  std::vector<Node> nodes_;
};

/// Confluent divided difference a[z_0, ..., z_n]; repeated points use
/// derivatives. Throws std::domain_error when a needed derivative is not
/// available or not finite.
double divided_difference(const SmoothFunction &a, std::vector<double> points);

/// H(a, g): the polynomial of degree < deg g agreeing with a to the order of
/// each root of g. Built from the Newton form over repeated nodes.
Polynomial hermite_interpolant(const SmoothFunction &a, const NodeSet &g);

/// Q(a, g) = (a - H(a, g)) / g, evaluated as the divided difference
/// a[roots of g, t], which fills the removable singularities at the roots.
/// Derivatives follow from Q^{(k)}(t) = k! a[roots of g, t, ..., t] with t
/// repeated k + 1 times.
SmoothFunction hermite_quotient(const SmoothFunction &a, const NodeSet &g);

/// Degree-k orthogonal polynomial for S^{d-1} normalised to G_k(1) = 1
/// (Chebyshev T_k for d = 2, Legendre for d = 3).
Polynomial gegenbauer_polynomial(int k, int d);

/// Coefficients c_k with h = sum c_k G_k^{(d)}.
std::vector<double> gegenbauer_expand(const Polynomial &h, int d);

struct CertifyOptions {
  int grid_points = 10000;
  double delta = 1e-9;          ///< pointwise grid covers [-1, 1 - delta]
  double pointwise_tol = 1e-9;  ///< allowed h - a > 0, relative to max(1, |a|)
  double pd_tol = 1e-12;        ///< allowed negative expansion coefficient
};

struct Certificate {
  Polynomial interpolant;
  std::vector<double> expansion_coeffs;
  std::vector<double> nodes;
  double lower_bound = 0.0;
  bool pointwise_ok = false;
  bool pd_ok = false;
  int dim = 0;
  int n = 0;
  double min_slack = 0.0;               ///< min over checked t of a(t) - h(t)
  std::optional<double> witness;        ///< t with h(t) > a(t), if any
  std::optional<int> offending_index;   ///< first negative expansion coefficient

  bool valid() const { return pointwise_ok && pd_ok; }
};

/// Linear-programming lower bound for sum_{i != j} a(<x_i, x_j>) over all
/// N-point configurations on S^{d-1}: with h = H(a, g), if h <= a on [-1, 1)
/// and h has nonnegative expansion coefficients then the energy is at least
/// N^2 c_0 - N h(1). Typical use passes g = F^2 over the distinct inner
/// products of a candidate configuration (NodeSet::doubled).
Certificate lp_certify(const SmoothFunction &a, int n, int d, const NodeSet &g,
                       const CertifyOptions &options = {});

/// |<x,y>|^p written as a function of the inner product u of the images on the
/// unit projective circle: a(u) = ((1 + u) / 2)^{p/2}. Derivatives in closed
/// form.
SmoothFunction transported_power_kernel(double p);

/// a(t) = |t|^p with closed-form derivatives (polynomial t^p for even p).
SmoothFunction inner_power_kernel(double p);

struct HalfCircleCertificate {
  Certificate certificate;
  double achieved = 0.0;  ///< FP_p of the half-circle configuration
  double gap = 0.0;       ///< achieved - lower_bound
};

/// Certificate that N equally spaced lines in R^2 minimise FP_p. The lines are
/// mapped to N equally spaced points of the unit projective circle (inner
/// products u = 2 t^2 - 1), and lp_certify runs on d = 2 with the transported
/// kernel, doubled at the floor(N/2) distinct values of u.
HalfCircleCertificate certify_half_circle(int n, double p, const CertifyOptions &options = {});

}  // namespace framepot

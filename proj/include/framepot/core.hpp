#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

namespace framepot {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// An ordered list of N unit vectors in R^d (N >= 2, d >= 2).
///
/// Vectors are stored as the columns of the d x N synthesis matrix. Inputs
/// within 1e-6 of unit norm are renormalized on construction; anything
/// further away is rejected with std::invalid_argument.
class Configuration {
 public:
  static constexpr double kNormTolerance = 1e-6;

  explicit Configuration(Matrix synthesis);
  Configuration(std::size_t dim, const std::vector<std::vector<double>> &vectors);

  std::size_t dim() const { return static_cast<std::size_t>(synthesis_.rows()); }
  std::size_t size() const { return static_cast<std::size_t>(synthesis_.cols()); }

  const Matrix &synthesis() const { return synthesis_; }
  Eigen::Ref<const Vector> vector(std::size_t i) const {
    return synthesis_.col(static_cast<Eigen::Index>(i));
  }

  std::vector<std::vector<double>> rows() const;

 private:
  Matrix synthesis_;
};

/// Symmetric N x N matrix of pairwise inner products.
Matrix gram(const Configuration &config);

/// P_i = x_i x_i^T for each vector, each d x d matrix flattened row-major.
/// The lifted points satisfy <P_x, P_y> = <x,y>^2 and
/// |P_x - P_y|^2 = 2 - 2 <x,y>^2.
std::vector<Vector> lift_projective(const Configuration &config);

/// The lifted points viewed as a configuration of unit vectors in R^{d*d}
/// (Frobenius norm of x x^T is 1).
Configuration lifted_configuration(const Configuration &config);

/// d = 2 only: (x1^2, sqrt(2) x1 x2, x2^2) coordinates of the lifted points.
/// They lie on the circle centred at (1/2, 0, 1/2) with radius 1/sqrt(2).
std::vector<Eigen::Vector3d> lift_circle_coordinates(const Configuration &config);

/// d = 2 only: the projective circle rescaled to the unit circle,
/// x = (cos a, sin a) -> (cos 2a, sin 2a). Inner products transform as
/// u = 2 t^2 - 1.
Configuration projective_circle(const Configuration &config);

/// S = sum_k x_k x_k^T. A FUNTF has S = (N/d) I.
Matrix frame_operator(const Configuration &config);

/// True iff the smallest singular value of the synthesis matrix exceeds tol.
bool is_frame(const Configuration &config, double tol);

/// Sorted multiset of |<x_i, x_j>| over i < j. Equal for configurations
/// related by orthogonal maps, permutations and sign flips; the converse
/// does not hold in general.
struct CanonicalInvariant {
  std::vector<double> sorted_abs_offdiag;
};

CanonicalInvariant canonical_invariant(const Configuration &config);

/// Elementwise comparison of two invariants. Necessary condition only.
bool same_invariant(const CanonicalInvariant &a, const CanonicalInvariant &b,
                    double tol = 1e-8);

/// Hex FNV-1a digest of the invariant rounded to `digits` decimals, used to
/// tag structurally identical configurations in sweep output.
std::string invariant_digest(const CanonicalInvariant &inv, int digits = 6);

}  // namespace framepot

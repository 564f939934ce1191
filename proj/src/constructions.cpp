#include "framepot/constructions.hpp"

#include "framepot/potentials.hpp"
#include "framepot/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace framepot {

Configuration half_circle(int n) {
  if (n < 2) throw std::invalid_argument("half_circle needs N >= 2");
  Matrix m(2, n);
  for (int k = 0; k < n; ++k) {
    const double angle = k * std::numbers::pi / n;
    m(0, k) = std::cos(angle);
    m(1, k) = std::sin(angle);
  }
  return Configuration(std::move(m));
}

Configuration onb_copies(int d, int k) {
  if (d < 2 || k < 1) throw std::invalid_argument("onb_copies needs d >= 2 and k >= 1");
  if (d * k < 2) throw std::invalid_argument("onb_copies needs at least 2 vectors");
  Matrix m = Matrix::Zero(d, d * k);
  for (int c = 0; c < k; ++c) {
    m.block(0, c * d, d, d).setIdentity();
  }
  return Configuration(std::move(m));
}

Configuration onb_plus(int d) {
  if (d < 2) throw std::invalid_argument("onb_plus needs d >= 2");
  Matrix m = Matrix::Zero(d, d + 1);
  m.leftCols(d).setIdentity();
  m(0, d) = 1.0;
  return Configuration(std::move(m));
}

namespace {

// Columns: simplex of n+1 unit vectors in R^n, valid for n >= 1.
Matrix simplex_block(int n) {
  const int ambient = n + 1;
  // Projections of e_1..e_{n+1} onto the complement of the all-ones vector.
  Matrix projected = Matrix::Identity(ambient, ambient) -
                     Matrix::Constant(ambient, ambient, 1.0 / ambient);
  // Orthonormal basis of the complement: trailing n columns of a QR of the
  // matrix [1 | I] (the first column spans the all-ones direction).
  Matrix seed(ambient, ambient);
  seed.col(0).setOnes();
  seed.rightCols(n) = Matrix::Identity(ambient, ambient).leftCols(n);
  Eigen::HouseholderQR<Matrix> qr(seed);
  const Matrix q = qr.householderQ() * Matrix::Identity(ambient, ambient);
  const Matrix basis = q.rightCols(n);
  Matrix coords = basis.transpose() * projected;
  for (int j = 0; j < ambient; ++j) coords.col(j).normalize();
  return coords;
}

}  // namespace

Configuration simplex(int n) {
  if (n < 2) throw std::invalid_argument("simplex needs n >= 2");
  return Configuration(simplex_block(n));
}

Configuration lifted_etf(int d, int k) {
  if (d < 2) throw std::invalid_argument("lifted_etf needs d >= 2");
  if (k < 1 || k > d) throw std::invalid_argument("lifted_etf needs 1 <= k <= d");
  Matrix m = Matrix::Zero(d, d + 1);
  // k = 1 gives {e_1, -e_1}: ONB+ up to a sign flip.
  m.topLeftCorner(k, k + 1) = simplex_block(k);
  for (int i = k; i < d; ++i) m(i, i + 1) = 1.0;
  return Configuration(std::move(m));
}

Configuration symmetrize(const Configuration &config) {
  if (coherence(config) >= 1.0 - 1e-12) {
    throw std::invalid_argument("symmetrize requires coherence < 1 (no repeated or antipodal vectors)");
  }
  const Matrix &x = config.synthesis();
  Matrix m(x.rows(), 2 * x.cols());
  m << x, -x;
  return Configuration(std::move(m));
}

Configuration random_uniform(int n, int d, std::uint64_t seed) {
  if (n < 2 || d < 2) throw std::invalid_argument("random_uniform needs N >= 2 and d >= 2");
  Rng rng(seed);
  Matrix m(d, n);
  for (int j = 0; j < n; ++j) {
    double norm = 0.0;
    do {
      for (int i = 0; i < d; ++i) m(i, j) = rng.normal();
      norm = m.col(j).norm();
    } while (norm < 1e-12);
    m.col(j) /= norm;
  }
  return Configuration(std::move(m));
}

NamedKind parse_named_kind(std::string_view name) {
  if (name == "half-circle") return NamedKind::HalfCircle;
  if (name == "onb-copies") return NamedKind::OnbCopies;
  if (name == "onb-plus") return NamedKind::OnbPlus;
  if (name == "simplex") return NamedKind::Simplex;
  if (name == "lifted-etf") return NamedKind::LiftedEtf;
  if (name == "random") return NamedKind::RandomUniform;
  throw std::invalid_argument("unknown configuration kind '" + std::string(name) + "'");
}

std::string_view to_string(NamedKind kind) {
  switch (kind) {
    case NamedKind::HalfCircle: return "half-circle";
    case NamedKind::OnbCopies: return "onb-copies";
    case NamedKind::OnbPlus: return "onb-plus";
    case NamedKind::Simplex: return "simplex";
    case NamedKind::LiftedEtf: return "lifted-etf";
    case NamedKind::RandomUniform: return "random";
  }
  return "unknown";
}

Configuration construct(const NamedConfig &spec) {
  switch (spec.kind) {
    case NamedKind::HalfCircle: return half_circle(spec.n);
    case NamedKind::OnbCopies: return onb_copies(spec.d, spec.k);
    case NamedKind::OnbPlus: return onb_plus(spec.d);
    case NamedKind::Simplex: return simplex(spec.d);
    case NamedKind::LiftedEtf: return lifted_etf(spec.d, spec.k);
    case NamedKind::RandomUniform: return random_uniform(spec.n, spec.d, spec.seed);
  }
  throw std::invalid_argument("unknown configuration kind");
}

}  // namespace framepot

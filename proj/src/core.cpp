#include "framepot/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace framepot {

Configuration::Configuration(Matrix synthesis) : synthesis_(std::move(synthesis)) {
  if (synthesis_.rows() < 2) {
    throw std::invalid_argument("configuration dimension must be at least 2");
  }
  if (synthesis_.cols() < 2) {
    throw std::invalid_argument("configuration needs at least 2 vectors");
  }
  for (Eigen::Index j = 0; j < synthesis_.cols(); ++j) {
    const double norm = synthesis_.col(j).norm();
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
      throw std::invalid_argument("vector " + std::to_string(j) +
                                  " is not unit norm (|x| = " + std::to_string(norm) + ")");
    }
    synthesis_.col(j) /= norm;
  }
}

namespace {

Matrix to_synthesis(std::size_t dim, const std::vector<std::vector<double>> &vectors) {
  Matrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != dim) {
      throw std::invalid_argument("vector " + std::to_string(j) + " has length " +
                                  std::to_string(vectors[j].size()) + ", expected " +
                                  std::to_string(dim));
    }
    for (std::size_t i = 0; i < dim; ++i) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = vectors[j][i];
    }
  }
  return m;
}

}  // namespace

Configuration::Configuration(std::size_t dim, const std::vector<std::vector<double>> &vectors)
    : Configuration(to_synthesis(dim, vectors)) {}

std::vector<std::vector<double>> Configuration::rows() const {
  std::vector<std::vector<double>> out(size(), std::vector<double>(dim()));
  for (std::size_t j = 0; j < size(); ++j) {
    for (std::size_t i = 0; i < dim(); ++i) {
      out[j][i] = synthesis_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

Matrix gram(const Configuration &config) {
  const Matrix &x = config.synthesis();
  const Eigen::Index n = x.cols();
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      g(i, j) = x.col(i).dot(x.col(j));
      g(j, i) = g(i, j);
    }
  }
  return g;
}

std::vector<Vector> lift_projective(const Configuration &config) {
  const std::size_t d = config.dim();
  std::vector<Vector> out;
  out.reserve(config.size());
  for (std::size_t k = 0; k < config.size(); ++k) {
    const auto x = config.vector(k);
    Vector p(static_cast<Eigen::Index>(d * d));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        p(static_cast<Eigen::Index>(r * d + c)) =
            x(static_cast<Eigen::Index>(r)) * x(static_cast<Eigen::Index>(c));
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

Configuration lifted_configuration(const Configuration &config) {
  const auto lifted = lift_projective(config);
  Matrix m(lifted.front().size(), static_cast<Eigen::Index>(lifted.size()));
  for (std::size_t k = 0; k < lifted.size(); ++k) {
    m.col(static_cast<Eigen::Index>(k)) = lifted[k];
  }
  return Configuration(std::move(m));
}

std::vector<Eigen::Vector3d> lift_circle_coordinates(const Configuration &config) {
  if (config.dim() != 2) {
    throw std::invalid_argument("lift_circle_coordinates requires d = 2");
  }
  std::vector<Eigen::Vector3d> out;
  out.reserve(config.size());
  for (std::size_t k = 0; k < config.size(); ++k) {
    const auto x = config.vector(k);
    out.emplace_back(x(0) * x(0), std::sqrt(2.0) * x(0) * x(1), x(1) * x(1));
  }
  return out;
}

Configuration projective_circle(const Configuration &config) {
  if (config.dim() != 2) {
    throw std::invalid_argument("projective_circle requires d = 2");
  }
  Matrix m(2, static_cast<Eigen::Index>(config.size()));
  for (std::size_t k = 0; k < config.size(); ++k) {
    const auto x = config.vector(k);
    const auto c = static_cast<Eigen::Index>(k);
    m(0, c) = x(0) * x(0) - x(1) * x(1);
    m(1, c) = 2.0 * x(0) * x(1);
  }
  return Configuration(std::move(m));
}

Matrix frame_operator(const Configuration &config) {
  const Matrix &x = config.synthesis();
  return x * x.transpose();
}

bool is_frame(const Configuration &config, double tol) {
  Eigen::JacobiSVD<Matrix> svd(config.synthesis());
  const auto &sv = svd.singularValues();
  // A d x N synthesis matrix with N < d can never span R^d.
  if (sv.size() < static_cast<Eigen::Index>(config.dim())) return false;
  return sv(sv.size() - 1) > tol;
}

CanonicalInvariant canonical_invariant(const Configuration &config) {
  const Matrix g = gram(config);
  const Eigen::Index n = g.rows();
  CanonicalInvariant inv;
  inv.sorted_abs_offdiag.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      inv.sorted_abs_offdiag.push_back(std::abs(g(i, j)));
    }
  }
  std::sort(inv.sorted_abs_offdiag.begin(), inv.sorted_abs_offdiag.end());
  return inv;
}

bool same_invariant(const CanonicalInvariant &a, const CanonicalInvariant &b, double tol) {
  if (a.sorted_abs_offdiag.size() != b.sorted_abs_offdiag.size()) return false;
  for (std::size_t i = 0; i < a.sorted_abs_offdiag.size(); ++i) {
    if (std::abs(a.sorted_abs_offdiag[i] - b.sorted_abs_offdiag[i]) > tol) return false;
  }
  return true;
}

std::string invariant_digest(const CanonicalInvariant &inv, int digits) {
  std::uint64_t hash = 14695981039346656037ULL;
  const auto mix = [&hash](const char *s) {
    for (; *s != '\0'; ++s) {
      hash ^= static_cast<unsigned char>(*s);
      hash *= 1099511628211ULL;
    }
  };
  char buf[64];
  for (double v : inv.sorted_abs_offdiag) {
    std::snprintf(buf, sizeof(buf), "%.*f;", digits, v);
    // -0.000000 and 0.000000 must hash the same
    mix(buf[0] == '-' ? buf + 1 : buf);
  }
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace framepot

// Copyright 2026 The memchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEMCHAN_GAUSSIAN_HPP
#define MEMCHAN_GAUSSIAN_HPP

// Covariance-matrix algebra for bosonic Gaussian states.
//
// Conventions: quadratures ordered [q1, p1, ..., qs, ps], vacuum variance 1/2
// ([q, p] = i), entropies in bits.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "memchan/errors.hpp"

namespace memchan {

class CovarianceMatrix {
 public:
  using Matrix = Eigen::MatrixXd;

  /// Validates shape (2s x 2s, s >= 1), finiteness and symmetry. The stored
  /// matrix is the symmetric part of `entries`.
  explicit CovarianceMatrix(const Matrix &entries) {
    if (entries.rows() != entries.cols()) {
      throw ValidationError("covariance matrix must be square");
    }
    if (entries.rows() < 2 || entries.rows() % 2 != 0) {
      throw ValidationError("covariance matrix dimension must be 2s with s >= 1, got " +
                            std::to_string(entries.rows()));
    }
    if (!entries.allFinite()) {
      throw ValidationError("covariance matrix has non-finite entries");
    }
    const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
    if ((entries - entries.transpose()).cwiseAbs().maxCoeff() > tol::kSymmetry * scale) {
      throw ValidationError("covariance matrix is not symmetric");
    }
    entries_ = 0.5 * (entries + entries.transpose());
  }

  static CovarianceMatrix vacuum(int modes) {
    if (modes < 1) throw ValidationError("mode count must be positive");
    return CovarianceMatrix(0.5 * Matrix::Identity(2 * modes, 2 * modes));
  }

  static CovarianceMatrix zero(int modes) {
    if (modes < 1) throw ValidationError("mode count must be positive");
    return CovarianceMatrix(Matrix::Zero(2 * modes, 2 * modes));
  }

  int modes() const { return static_cast<int>(entries_.rows() / 2); }
  int dimension() const { return static_cast<int>(entries_.rows()); }
  const Matrix &matrix() const { return entries_; }
  double operator()(int row, int col) const { return entries_(row, col); }

  /// The 2x2 block coupling mode `i` (rows) with mode `j` (columns), 0-based.
  Eigen::Matrix2d block(int i, int j) const { return entries_.block<2, 2>(2 * i, 2 * j); }

  CovarianceMatrix operator+(const CovarianceMatrix &other) const {
    if (other.modes() != modes()) throw ValidationError("mode count mismatch in sum");
    return CovarianceMatrix(entries_ + other.entries_);
  }

 private:
  Matrix entries_;
};

/// Symplectic moduli |lambda_1| >= ... >= |lambda_s|, one per mode.
struct SymplecticSpectrum {
  std::vector<double> moduli;

  int modes() const { return static_cast<int>(moduli.size()); }
};

/// Entropy in bits of a thermal state with mean photon number x.
inline double g_entropy(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("g(x) requires a finite x >= 0, got " + std::to_string(x));
  }
  if (x < tol::kEntropyFloor) return 0.0;
  return (x + 1.0) * std::log2(x + 1.0) - x * std::log2(x);
}

/// Direct sum of s copies of [[0, 1], [-1, 0]].
inline Eigen::MatrixXd symplectic_form(int modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (int j = 0; j < modes; ++j) {
    omega(2 * j, 2 * j + 1) = 1.0;
    omega(2 * j + 1, 2 * j) = -1.0;
  }
  return omega;
}

/// The 2s real solutions of det(gamma - lambda * (+)J) = 0 with J = i*Omega,
/// sorted descending. They come in +/- pairs.
inline std::vector<double> raw_symplectic_eigenvalues(const CovarianceMatrix &gamma) {
  // Omega * gamma has eigenvalues +/- i*lambda; the solutions of the
  // determinant equation are the eigenvalues of i * Omega * gamma.
  const Eigen::MatrixXd product = symplectic_form(gamma.modes()) * gamma.matrix();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(product, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigenvalue decomposition failed");
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(product.rows()));
  for (const auto &mu : solver.eigenvalues()) values.push_back(-mu.imag());
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

/// Symplectic spectrum of any s-mode covariance matrix by dense eigen-decomposition.
inline SymplecticSpectrum symplectic_spectrum_general(const CovarianceMatrix &gamma) {
  const std::vector<double> raw = raw_symplectic_eigenvalues(gamma);
  // Descending order puts the s non-negative members of the +/- pairs first.
  SymplecticSpectrum spectrum;
  spectrum.moduli.reserve(static_cast<std::size_t>(gamma.modes()));
  for (int j = 0; j < gamma.modes(); ++j) {
    spectrum.moduli.push_back(std::abs(raw[static_cast<std::size_t>(j)]));
  }
  std::sort(spectrum.moduli.begin(), spectrum.moduli.end(), std::greater<>());
  return spectrum;
}

/// Two-mode spectrum from the block determinants:
///   lambda^4 - (|g1| + |g2| + 2|s12|) lambda^2 + |g12| = 0.
inline SymplecticSpectrum symplectic_spectrum_biquadratic(const CovarianceMatrix &gamma) {
  if (gamma.modes() != 2) {
    throw ValidationError("biquadratic spectrum requires a two-mode covariance matrix");
  }
  const double det_first = gamma.block(0, 0).determinant();
  const double det_second = gamma.block(1, 1).determinant();
  const double det_cross = gamma.block(0, 1).determinant();
  const double det_full = gamma.matrix().determinant();

  const double linear = det_first + det_second + 2.0 * det_cross;
  double discriminant = linear * linear - 4.0 * det_full;
  const double scale = std::max(1.0, linear * linear);
  if (discriminant < -tol::kPhysicality * scale) {
    throw NumericalError("negative biquadratic discriminant: unphysical covariance matrix");
  }
  // Degenerate spectra sit at a double root; round-off otherwise splits them by O(sqrt(eps)).
  if (discriminant <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
    discriminant = 0.0;
  }
  const double root = std::sqrt(discriminant);
  const double upper = 0.5 * (linear + root);
  const double lower = 0.5 * (linear - root);
  if (lower < -tol::kPhysicality * scale) {
    throw NumericalError("negative squared symplectic eigenvalue");
  }
  return SymplecticSpectrum{{std::sqrt(upper), std::sqrt(std::max(lower, 0.0))}};
}

/// Von Neumann entropy (bits): sum over modes of g(|lambda_j| - 1/2).
inline double entropy(const CovarianceMatrix &gamma) {
  double total = 0.0;
  for (double modulus : symplectic_spectrum_general(gamma).moduli) {
    const double excess = modulus - 0.5;
    if (excess < -tol::kPhysicality) {
      throw NumericalError("symplectic eigenvalue " + std::to_string(modulus) +
                           " below the vacuum level");
    }
    total += g_entropy(std::max(excess, 0.0));
  }
  return total;
}

/// S * gamma * S^T for a 2s x 2s transformation S.
inline CovarianceMatrix congruence(const CovarianceMatrix &gamma, const Eigen::MatrixXd &transform) {
  if (transform.rows() != gamma.dimension() || transform.cols() != gamma.dimension()) {
    throw ValidationError("transformation dimension does not match covariance matrix");
  }
  return CovarianceMatrix(transform * gamma.matrix() * transform.transpose());
}

/// 50/50 beam splitter: (q1, p1, q2, p2) -> (q+, p+, q-, p-), x+- = (x1 +- x2)/sqrt(2).
inline Eigen::Matrix4d beamsplitter_matrix() {
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4d s;
  s << h, 0, h, 0,
       0, h, 0, h,
       h, 0, -h, 0,
       0, h, 0, -h;
  return s;
}

inline CovarianceMatrix beamsplitter_transform(const CovarianceMatrix &gamma) {
  if (gamma.modes() != 2) {
    throw ValidationError("beam splitter acts on two-mode covariance matrices only");
  }
  return congruence(gamma, beamsplitter_matrix());
}

}  // namespace memchan

#endif  // MEMCHAN_GAUSSIAN_HPP

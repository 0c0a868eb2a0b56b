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

#include "memchan/gaussian.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "test_support.hpp"

using namespace memchan;
using memchan::testing::random_physical;

namespace {

CovarianceMatrix diag4(double a, double b, double c, double d) {
  return CovarianceMatrix(Eigen::Vector4d(a, b, c, d).asDiagonal().toDenseMatrix());
}

CovarianceMatrix two_mode_squeezed(double eta, double nbar) {
  const double d = 0.5 + eta * nbar;
  const double s = std::sqrt(eta * nbar * (1.0 + eta * nbar));
  Eigen::Matrix4d m;
  m << d, 0, -s, 0, 0, d, 0, s, -s, 0, d, 0, 0, s, 0, d;
  return CovarianceMatrix(m);
}

}  // namespace

TEST(GEntropy, known_values) {
  EXPECT_EQ(g_entropy(0.0), 0.0);
  EXPECT_DOUBLE_EQ(g_entropy(1.0), 2.0);
  EXPECT_NEAR(g_entropy(1.0 / 3.0), memchan::testing::kG_OneThird, 1e-14);
  EXPECT_NEAR(g_entropy(4.0 / 3.0), memchan::testing::kG_FourThirds, 1e-14);
  EXPECT_EQ(g_entropy(1e-13), 0.0);
}

TEST(GEntropy, rejects_bad_arguments) {
  EXPECT_THROW(g_entropy(-1e-3), DomainError);
  EXPECT_THROW(g_entropy(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(g_entropy(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(GEntropy, increasing_and_concave) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_x(-6.0, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double x = std::pow(10.0, log_x(rng));
    const double h = 1e-3 * x;
    const double left = g_entropy(x - h), mid = g_entropy(x), right = g_entropy(x + h);
    EXPECT_GT(right, mid) << x;
    EXPECT_GT(mid, left) << x;
    EXPECT_LT(right - 2.0 * mid + left, 0.0) << x;
  }
}

TEST(GEntropy, matches_long_double_reference) {
  for (double x : {1e-9, 1e-4, 0.05, 0.5, 2.0, 17.0, 250.0}) {
    EXPECT_NEAR(g_entropy(x), static_cast<double>(memchan::testing::g_reference(x)),
                1e-13 * std::max(1.0, g_entropy(x)));
  }
}

TEST(CovarianceMatrix, validates_shape_and_symmetry) {
  EXPECT_THROW(CovarianceMatrix(Eigen::MatrixXd::Identity(3, 3)), ValidationError);
  EXPECT_THROW(CovarianceMatrix(Eigen::MatrixXd::Identity(2, 4)), ValidationError);
  Eigen::Matrix2d skew;
  skew << 1, 0.1, 0, 1;
  EXPECT_THROW(CovarianceMatrix{skew}, ValidationError);
  Eigen::Matrix2d nan_entry = Eigen::Matrix2d::Identity();
  nan_entry(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(CovarianceMatrix{nan_entry}, ValidationError);
  EXPECT_EQ(CovarianceMatrix::vacuum(3).modes(), 3);
}

TEST(SymplecticSpectrum, single_mode_cases) {
  EXPECT_NEAR(symplectic_spectrum_general(CovarianceMatrix::vacuum(1)).moduli.at(0), 0.5, 1e-15);
  const CovarianceMatrix thermal((0.5 + 1.0 / 3.0) * Eigen::Matrix2d::Identity());
  EXPECT_NEAR(symplectic_spectrum_general(thermal).moduli.at(0), 0.5 + 1.0 / 3.0, 1e-15);
}

TEST(SymplecticSpectrum, biquadratic_simple_cases) {
  const auto vac = symplectic_spectrum_biquadratic(CovarianceMatrix::vacuum(2));
  EXPECT_DOUBLE_EQ(vac.moduli[0], 0.5);
  EXPECT_DOUBLE_EQ(vac.moduli[1], 0.5);
  for (double eta : {0.0, 0.19, 0.5, 1.0}) {
    for (double nbar : {0.1, 1.0, 10.0}) {
      const auto spec = symplectic_spectrum_biquadratic(two_mode_squeezed(eta, nbar));
      EXPECT_NEAR(spec.moduli[0], 0.5, 1e-10);
      EXPECT_NEAR(spec.moduli[1], 0.5, 1e-10);
    }
  }
}

TEST(SymplecticSpectrum, degenerate_output_state) {
  const double eta = 0.19, nbar = 1.0, noise = 1.0 / 3.0, x = 0.7;
  const double u = 0.5 + eta * nbar + noise;
  const double v = std::sqrt(eta * nbar * (1 + eta * nbar)) + x * noise;
  Eigen::Matrix4d m;
  m << u, 0, -v, 0, 0, u, 0, v, -v, 0, u, 0, 0, v, 0, u;
  const CovarianceMatrix gamma(m);
  const double expected = std::sqrt(u * u - v * v);
  const auto quad = symplectic_spectrum_biquadratic(gamma);
  const auto general = symplectic_spectrum_general(gamma);
  EXPECT_EQ(quad.moduli[0], quad.moduli[1]);
  for (int j = 0; j < 2; ++j) {
    EXPECT_NEAR(quad.moduli[j], expected, 1e-12);
    EXPECT_NEAR(general.moduli[j], expected, 1e-12);
  }
}

TEST(SymplecticSpectrum, biquadratic_errors) {
  EXPECT_THROW(symplectic_spectrum_biquadratic(CovarianceMatrix::vacuum(1)), ValidationError);
  Eigen::Matrix4d bad;
  bad << -1.4, 0.0, 1.1, 0.1, 0.0, 1.2, 0.1, -1.8, 1.1, 0.1, 1.5, 0.2, 0.1, -1.8, 0.2, 0.9;
  EXPECT_THROW(symplectic_spectrum_biquadratic(CovarianceMatrix(bad)), NumericalError);
}

TEST(SymplecticSpectrum, general_recovers_constructed_spectrum) {
  std::mt19937_64 rng(11);
  for (int modes : {1, 2, 3, 4}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto sample = random_physical(rng, modes);
      const auto spec = symplectic_spectrum_general(sample.gamma);
      ASSERT_EQ(spec.modes(), modes);
      for (int j = 0; j < modes; ++j) {
        EXPECT_NEAR(spec.moduli[j], sample.spectrum[j], 1e-9 * sample.spectrum[j]);
      }
    }
  }
}

TEST(SymplecticSpectrum, oracle_equivalence_random_two_mode) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto sample = random_physical(rng, 2);
    const auto quad = symplectic_spectrum_biquadratic(sample.gamma);
    const auto general = symplectic_spectrum_general(sample.gamma);
    ASSERT_NEAR(quad.moduli[0], general.moduli[0], 1e-10) << trial;
    ASSERT_NEAR(quad.moduli[1], general.moduli[1], 1e-10) << trial;
  }
}

TEST(SymplecticSpectrum, raw_eigenvalues_pair_up) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto sample = random_physical(rng, 1 + trial % 3);
    const auto raw = raw_symplectic_eigenvalues(sample.gamma);
    const std::size_t n = raw.size();
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_NEAR(raw[k], -raw[n - 1 - k], 1e-10);
    }
  }
}

TEST(Entropy, pure_and_thermal_states) {
  EXPECT_EQ(entropy(CovarianceMatrix::vacuum(1)), 0.0);
  EXPECT_LT(entropy(two_mode_squeezed(0.7, 3.0)), 1e-9);
  const CovarianceMatrix thermal((0.5 + 1.0 / 3.0) * Eigen::Matrix2d::Identity());
  EXPECT_NEAR(entropy(thermal), memchan::testing::kG_OneThird, 1e-13);
}

TEST(Entropy, rejects_sub_vacuum_spectrum) {
  EXPECT_THROW(entropy(CovarianceMatrix(0.2 * Eigen::Matrix2d::Identity())), NumericalError);
}

TEST(Entropy, purity_of_input_family) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> eta(0.0, 1.0), nbar(1e-3, 100.0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto gamma = two_mode_squeezed(eta(rng), nbar(rng));
    const auto spec = symplectic_spectrum_general(gamma);
    EXPECT_NEAR(spec.moduli[0], 0.5, 1e-10);
    EXPECT_NEAR(spec.moduli[1], 0.5, 1e-10);
    EXPECT_LE(entropy(gamma), 1e-9);
  }
}

TEST(BeamSplitter, noise_becomes_diagonal) {
  const double n = 0.4, x = 0.6;
  Eigen::Matrix4d sensitive, symmetric;
  sensitive << n, 0, -x * n, 0, 0, n, 0, x * n, -x * n, 0, n, 0, 0, x * n, 0, n;
  symmetric << n, 0, -x * n, 0, 0, n, 0, -x * n, -x * n, 0, n, 0, 0, -x * n, 0, n;
  const auto a = beamsplitter_transform(CovarianceMatrix(sensitive)).matrix();
  const auto b = beamsplitter_transform(CovarianceMatrix(symmetric)).matrix();
  EXPECT_TRUE(a.isApprox(diag4(n * (1 - x), n * (1 + x), n * (1 + x), n * (1 - x)).matrix(), 1e-14));
  EXPECT_TRUE(b.isApprox(diag4(n * (1 - x), n * (1 - x), n * (1 + x), n * (1 + x)).matrix(), 1e-14));
}

TEST(BeamSplitter, isotropic_invariant_and_involutive) {
  const CovarianceMatrix iso(2.5 * Eigen::Matrix4d::Identity());
  EXPECT_TRUE(beamsplitter_transform(iso).matrix().isApprox(iso.matrix(), 1e-15));
  std::mt19937_64 rng(3);
  const auto sample = random_physical(rng, 2);
  const auto twice = beamsplitter_transform(beamsplitter_transform(sample.gamma));
  EXPECT_TRUE(twice.matrix().isApprox(sample.gamma.matrix(), 1e-13));
  EXPECT_THROW(beamsplitter_transform(CovarianceMatrix::vacuum(1)), ValidationError);
  EXPECT_THROW(beamsplitter_transform(CovarianceMatrix::vacuum(3)), ValidationError);
}

TEST(BeamSplitter, is_symplectic) {
  const Eigen::MatrixXd s = beamsplitter_matrix();
  const Eigen::MatrixXd omega = symplectic_form(2);
  EXPECT_TRUE((s * omega * s.transpose()).isApprox(omega, 1e-15));
}

TEST(BeamSplitter, preserves_spectrum_and_entropy) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const auto sample = random_physical(rng, 2);
    const auto rotated = beamsplitter_transform(sample.gamma);
    EXPECT_NEAR(entropy(rotated), entropy(sample.gamma), 1e-10);
    const auto a = symplectic_spectrum_general(rotated).moduli;
    const auto b = symplectic_spectrum_general(sample.gamma).moduli;
    EXPECT_NEAR(a[0], b[0], 1e-10);
    EXPECT_NEAR(a[1], b[1], 1e-10);
  }
}

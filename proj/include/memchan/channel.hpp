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

#ifndef MEMCHAN_CHANNEL_HPP
#define MEMCHAN_CHANNEL_HPP

// Two-use bosonic channel with correlated additive thermal noise and the
// two-mode squeezed, classically modulated input family that feeds it.

#include <cmath>
#include <string>
#include <string_view>

#include "memchan/errors.hpp"
#include "memchan/gaussian.hpp"

namespace memchan {

enum class NoisePattern {
  /// q noise anticorrelated, p noise correlated across the two uses.
  PhaseSensitive,
  /// q and p noise both anticorrelated; independent phase-insensitive
  /// channels in the beam-splitter basis.
  Symmetric,
};

inline std::string_view to_string(NoisePattern pattern) {
  return pattern == NoisePattern::PhaseSensitive ? "phase-sensitive" : "symmetric";
}

inline NoisePattern parse_noise_pattern(std::string_view text) {
  if (text == "phase-sensitive") return NoisePattern::PhaseSensitive;
  if (text == "symmetric") return NoisePattern::Symmetric;
  throw ValidationError("unknown noise pattern '" + std::string(text) + "'");
}

class NoiseModel {
 public:
  /// `thermal` is the added photon number N >= 0, `memory` the correlation x in [0, 1].
  NoiseModel(double thermal, double memory, NoisePattern pattern = NoisePattern::PhaseSensitive)
      : thermal_(thermal), memory_(memory), pattern_(pattern) {
    if (!std::isfinite(thermal) || thermal < 0.0) {
      throw ValidationError("thermal noise N must be finite and >= 0");
    }
    if (!std::isfinite(memory) || memory < 0.0 || memory > 1.0) {
      throw ValidationError("memory coefficient x must lie in [0, 1]");
    }
  }

  double thermal() const { return thermal_; }
  double memory() const { return memory_; }
  NoisePattern pattern() const { return pattern_; }

 private:
  double thermal_;
  double memory_;
  NoisePattern pattern_;
};

/// Input ensemble: eta * nbar photons per mode go into two-mode squeezing
/// (sinh^2 r = eta * nbar), the remaining (1 - eta) * nbar into Gaussian
/// displacement with cross-mode correlation y.
class InputStrategy {
 public:
  InputStrategy(double eta, double correlation, double nbar)
      : eta_(eta), correlation_(correlation), nbar_(nbar) {
    if (!std::isfinite(eta) || eta < 0.0 || eta > 1.0) {
      throw ValidationError("degree of entanglement eta must lie in [0, 1]");
    }
    if (!std::isfinite(correlation) || std::abs(correlation) > 1.0) {
      throw ValidationError("classical correlation y must lie in [-1, 1]");
    }
    if (!std::isfinite(nbar) || nbar <= 0.0) {
      throw ValidationError("mean photon number nbar must be finite and > 0");
    }
  }

  double eta() const { return eta_; }
  double correlation() const { return correlation_; }
  double nbar() const { return nbar_; }

  double squeezing_photons() const { return eta_ * nbar_; }
  double modulation_photons() const { return (1.0 - eta_) * nbar_; }
  /// sqrt(eta nbar (1 + eta nbar)) = sinh(2r) / 2.
  double entanglement_amplitude() const {
    const double s = squeezing_photons();
    return std::sqrt(s * (1.0 + s));
  }

 private:
  double eta_;
  double correlation_;
  double nbar_;
};

inline CovarianceMatrix noise_covariance(const NoiseModel &model) {
  const double n = model.thermal();
  const double c = model.memory() * n;
  const double p_sign = model.pattern() == NoisePattern::PhaseSensitive ? 1.0 : -1.0;
  Eigen::Matrix4d m;
  m << n, 0, -c, 0,
       0, n, 0, p_sign * c,
       -c, 0, n, 0,
       0, p_sign * c, 0, n;
  return CovarianceMatrix(m);
}

/// Two-mode squeezed vacuum with sinh^2 r = eta * nbar (pure).
inline CovarianceMatrix input_covariance(const InputStrategy &strategy) {
  const double d = 0.5 + strategy.squeezing_photons();
  const double s = strategy.entanglement_amplitude();
  Eigen::Matrix4d m;
  m << d, 0, -s, 0,
       0, d, 0, s,
       -s, 0, d, 0,
       0, s, 0, d;
  return CovarianceMatrix(m);
}

/// The channel adds the noise covariance.
inline CovarianceMatrix output_covariance(const InputStrategy &strategy, const NoiseModel &model) {
  return input_covariance(strategy) + noise_covariance(model);
}

/// Covariance of the classical displacement distribution: q displacements
/// correlated (+y), p displacements anticorrelated (-y).
inline CovarianceMatrix modulation_covariance(const InputStrategy &strategy) {
  const double m = strategy.modulation_photons();
  const double c = strategy.correlation() * m;
  Eigen::Matrix4d cov;
  cov << m, 0, c, 0,
         0, m, 0, -c,
         c, 0, m, 0,
         0, -c, 0, m;
  return CovarianceMatrix(cov);
}

/// Output ensemble average; saturates the photon-number budget.
inline CovarianceMatrix mixture_covariance(const InputStrategy &strategy, const NoiseModel &model) {
  return output_covariance(strategy, model) + modulation_covariance(strategy);
}

/// Single-use channel: coherent input displaced by thermal noise N.
inline CovarianceMatrix monomodal_output_covariance(double thermal) {
  return CovarianceMatrix((0.5 + thermal) * Eigen::Matrix2d::Identity());
}

inline CovarianceMatrix monomodal_mixture_covariance(double nbar, double thermal) {
  return CovarianceMatrix((0.5 + nbar + thermal) * Eigen::Matrix2d::Identity());
}

}  // namespace memchan

#endif  // MEMCHAN_CHANNEL_HPP

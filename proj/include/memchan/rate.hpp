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

#ifndef MEMCHAN_RATE_HPP
#define MEMCHAN_RATE_HPP

// Achievable classical rates of Gaussian input ensembles.
//
// All rates are Holevo quantities of Gaussian ensembles. Calling the optimum a
// capacity assumes Gaussian ensembles are optimal for these channels, which is
// conjectured rather than proven.

#include <array>
#include <cmath>
#include <numbers>

#include "memchan/channel.hpp"
#include "memchan/errors.hpp"
#include "memchan/gaussian.hpp"

namespace memchan {

/// One evaluation of R(eta, y). Spectra are per mode, largest first; for the
/// phase-sensitive family both entries coincide.
struct RatePoint {
  double eta = 0.0;
  double y = 0.0;
  double rate_bits_per_mode = 0.0;
  std::array<double, 2> lambda_out{};
  std::array<double, 2> lambda_mix{};
};

enum class Basis {
  Modes,         ///< (q1, p1, q2, p2)
  BeamSplitter,  ///< (q+, p+, q-, p-)
};

/// One-shot capacity of the memoryless thermal channel, g(nbar + N) - g(N).
inline double monomodal_capacity(double nbar, double thermal) {
  if (!(nbar > 0.0)) throw DomainError("nbar must be > 0");
  return g_entropy(nbar + thermal) - g_entropy(thermal);
}

namespace detail {

inline double excess_over_vacuum(double modulus) {
  const double excess = modulus - 0.5;
  if (!(excess >= -tol::kPhysicality)) {
    throw NumericalError("unphysical parameters: symplectic eigenvalue below 1/2");
  }
  return std::max(excess, 0.0);
}

/// sqrt(u^2 - v^2) for a doubly degenerate two-mode spectrum.
inline double degenerate_modulus(double u, double v) {
  const double squared = (u - v) * (u + v);
  if (squared < -tol::kPhysicality) {
    throw NumericalError("unphysical parameters: u^2 < v^2");
  }
  return std::sqrt(std::max(squared, 0.0));
}

}  // namespace detail

/// Closed-form R(eta, y) for the phase-sensitive pattern:
///   u_out = 1/2 + eta nbar + N,  v_out = sqrt(eta nbar (1 + eta nbar)) + x N,
///   u_mix = 1/2 + nbar + N,      v_mix = v_out - y (1 - eta) nbar.
inline RatePoint rate_closed_form(const InputStrategy &strategy, const NoiseModel &model) {
  if (model.pattern() != NoisePattern::PhaseSensitive) {
    throw ValidationError("closed-form rate applies to the phase-sensitive pattern only");
  }
  const double nbar = strategy.nbar();
  const double noise = model.thermal();
  const double u_out = 0.5 + strategy.squeezing_photons() + noise;
  const double v_out = strategy.entanglement_amplitude() + model.memory() * noise;
  const double u_mix = 0.5 + nbar + noise;
  const double v_mix = v_out - strategy.correlation() * strategy.modulation_photons();

  const double lambda_out = detail::degenerate_modulus(u_out, v_out);
  const double lambda_mix = detail::degenerate_modulus(u_mix, v_mix);

  RatePoint point;
  point.eta = strategy.eta();
  point.y = strategy.correlation();
  point.lambda_out = {lambda_out, lambda_out};
  point.lambda_mix = {lambda_mix, lambda_mix};
  point.rate_bits_per_mode = g_entropy(detail::excess_over_vacuum(lambda_mix)) -
                             g_entropy(detail::excess_over_vacuum(lambda_out));
  return point;
}

/// R = [S(mixture) - S(output)] / 2 through the general spectrum routine.
inline RatePoint rate_generic(const InputStrategy &strategy, const NoiseModel &model,
                              Basis basis = Basis::Modes) {
  CovarianceMatrix output = output_covariance(strategy, model);
  CovarianceMatrix mixture = mixture_covariance(strategy, model);
  if (basis == Basis::BeamSplitter) {
    output = beamsplitter_transform(output);
    mixture = beamsplitter_transform(mixture);
  }
  const SymplecticSpectrum out_spectrum = symplectic_spectrum_general(output);
  const SymplecticSpectrum mix_spectrum = symplectic_spectrum_general(mixture);

  RatePoint point;
  point.eta = strategy.eta();
  point.y = strategy.correlation();
  double difference = 0.0;
  for (std::size_t j = 0; j < 2; ++j) {
    point.lambda_out[j] = out_spectrum.moduli[j];
    point.lambda_mix[j] = mix_spectrum.moduli[j];
    difference += g_entropy(detail::excess_over_vacuum(mix_spectrum.moduli[j])) -
                  g_entropy(detail::excess_over_vacuum(out_spectrum.moduli[j]));
  }
  point.rate_bits_per_mode = 0.5 * difference;
  return point;
}

/// Rate by the fastest exact route for the pattern.
inline double rate(const InputStrategy &strategy, const NoiseModel &model) {
  if (model.pattern() == NoisePattern::PhaseSensitive) {
    return rate_closed_form(strategy, model).rate_bits_per_mode;
  }
  return rate_generic(strategy, model).rate_bits_per_mode;
}

/// Quadrature squeezing 10 log10(e^{2r}) in dB, with sinh^2 r = eta * nbar.
inline double squeezing_db(double eta, double nbar) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("eta must lie in [0, 1]");
  if (!(nbar > 0.0)) throw DomainError("nbar must be > 0");
  const double r = std::asinh(std::sqrt(eta * nbar));
  return 20.0 * r / std::numbers::ln10;
}

}  // namespace memchan

#endif  // MEMCHAN_RATE_HPP

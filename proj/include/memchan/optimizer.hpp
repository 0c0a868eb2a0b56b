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

#ifndef MEMCHAN_OPTIMIZER_HPP
#define MEMCHAN_OPTIMIZER_HPP

// Deterministic maximization of R(eta, y) over [0, 1] x [-1, 1].
//
// Stage one evaluates a regular grid. Stage two runs a golden-section search
// over eta, bracketed around the grid argmax, whose objective is the rate
// maximized over y (a y-grid followed by golden section). Bracket endpoints
// are always evaluated, so optima on the boundary (eta = 0, y = +-1) are
// returned exactly.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>

#include "memchan/channel.hpp"
#include "memchan/errors.hpp"
#include "memchan/rate.hpp"

namespace memchan {

struct OptimizerOptions {
  int grid_eta = 101;
  int grid_y = 101;
  /// Stop once an iteration improves the rate by less than this (bits), and
  /// the width of grid-stage ties.
  double rate_tolerance = 1e-6;
  /// Bracket width at which golden-section searches stop.
  double argument_tolerance = 1e-4;
  /// Golden-section iteration budget per one-dimensional search.
  int max_iterations = 200;
};

struct OptimizationResult {
  double eta_star = 0.0;
  double y_star = 0.0;
  double rate_star = 0.0;
  /// max_y R(0, y), the best rate without entanglement.
  double rate_eta0 = 0.0;
  double y_eta0 = 0.0;
  /// rate_star / rate_eta0.
  double gain = 1.0;
  std::int64_t evaluations = 0;
  bool converged = true;
};

struct FixedEtaResult {
  double y_star = 0.0;
  double rate = 0.0;
  std::int64_t evaluations = 0;
  bool converged = true;
};

namespace detail {

struct Candidate {
  double eta = 0.0;
  double y = 0.0;
  double rate = -std::numeric_limits<double>::infinity();
};

/// Order on (rate, -eta, -|y|): rates within `tie` count as equal.
inline bool preferred(const Candidate &a, const Candidate &b, double tie) {
  if (a.rate > b.rate + tie) return true;
  if (b.rate > a.rate + tie) return false;
  if (a.eta != b.eta) return a.eta < b.eta;
  if (std::abs(a.y) != std::abs(b.y)) return std::abs(a.y) < std::abs(b.y);
  return a.rate > b.rate;
}

inline double grid_point(double lo, double hi, int i, int count) {
  if (i == count - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

template <class Objective>
class RateSearch {
 public:
  RateSearch(Objective objective, const OptimizerOptions &options)
      : objective_(std::move(objective)), options_(options) {
    if (options.grid_eta < 2 || options.grid_y < 2) {
      throw ValidationError("optimizer grids need at least two points per axis");
    }
    if (!(options.rate_tolerance > 0.0) || !(options.argument_tolerance > 0.0)) {
      throw ValidationError("optimizer tolerances must be positive");
    }
    if (options.max_iterations < 1) throw ValidationError("iteration budget must be positive");
  }

  std::int64_t evaluations() const { return evaluations_; }
  bool converged() const { return converged_; }

  Candidate evaluate(double eta, double y) {
    ++evaluations_;
    return Candidate{eta, y, objective_(eta, y)};
  }

  /// max over y in [-1, 1] at fixed eta.
  Candidate best_over_y(double eta) {
    const int count = options_.grid_y;
    Candidate best;
    int best_index = 0;
    for (int j = 0; j < count; ++j) {
      const Candidate c = evaluate(eta, grid_point(-1.0, 1.0, j, count));
      if (j == 0 || preferred(c, best, 0.0)) {
        best = c;
        best_index = j;
      }
    }
    const double lo = grid_point(-1.0, 1.0, std::max(best_index - 1, 0), count);
    const double hi = grid_point(-1.0, 1.0, std::min(best_index + 1, count - 1), count);
    const Candidate refined = golden(
        lo, hi, [&](double y) { return evaluate(eta, y); });
    return preferred(refined, best, 0.0) ? refined : best;
  }

  /// Coarse grid over the box; returns the argmax under the tie rule.
  Candidate grid_argmax(Candidate *strict_max = nullptr) {
    Candidate best;
    Candidate strict;
    bool first = true;
    for (int i = 0; i < options_.grid_eta; ++i) {
      const double eta = grid_point(0.0, 1.0, i, options_.grid_eta);
      for (int j = 0; j < options_.grid_y; ++j) {
        const Candidate c = evaluate(eta, grid_point(-1.0, 1.0, j, options_.grid_y));
        if (first || preferred(c, best, options_.rate_tolerance)) best = c;
        if (first || c.rate > strict.rate) strict = c;
        first = false;
      }
    }
    if (strict_max != nullptr) *strict_max = strict;
    return best;
  }

  /// Refine eta around a grid seed; each eta is scored by best_over_y.
  Candidate refine(const Candidate &seed) {
    const double step = 1.0 / static_cast<double>(options_.grid_eta - 1);
    const double lo = std::max(0.0, seed.eta - 2.0 * step);
    const double hi = std::min(1.0, seed.eta + 2.0 * step);
    Candidate best = best_over_y(seed.eta);
    const Candidate outer = golden(lo, hi, [&](double eta) { return best_over_y(eta); });
    return preferred(outer, best, 0.0) ? outer : best;
  }

 private:
  /// Golden-section maximization of a unimodal scalar function on [lo, hi].
  /// `score(t)` returns the candidate found at parameter t.
  template <class Score>
  Candidate golden(double lo, double hi, Score &&score) {
    constexpr double kInvPhi = std::numbers::phi - 1.0;
    Candidate best = score(lo);
    if (hi <= lo) return best;
    if (const Candidate c = score(hi); preferred(c, best, 0.0)) best = c;

    double a = lo;
    double b = hi;
    double left = b - kInvPhi * (b - a);
    double right = a + kInvPhi * (b - a);
    Candidate f_left = score(left);
    Candidate f_right = score(right);
    for (const Candidate &c : {f_left, f_right}) {
      if (preferred(c, best, 0.0)) best = c;
    }
    int iteration = 0;
    double improvement = std::numeric_limits<double>::infinity();
    while ((b - a) > options_.argument_tolerance || improvement >= options_.rate_tolerance) {
      if (++iteration > options_.max_iterations) {
        converged_ = false;
        break;
      }
      const double before = best.rate;
      if (f_left.rate >= f_right.rate) {
        b = right;
        right = left;
        f_right = f_left;
        left = b - kInvPhi * (b - a);
        f_left = score(left);
        if (preferred(f_left, best, 0.0)) best = f_left;
      } else {
        a = left;
        left = right;
        f_left = f_right;
        right = a + kInvPhi * (b - a);
        f_right = score(right);
        if (preferred(f_right, best, 0.0)) best = f_right;
      }
      improvement = best.rate - before;
    }
    return best;
  }

  Objective objective_;
  OptimizerOptions options_;
  std::int64_t evaluations_ = 0;
  bool converged_ = true;
};

inline std::function<double(double, double)> rate_objective(double nbar, double thermal,
                                                             double memory,
                                                             NoisePattern pattern) {
  const NoiseModel model(thermal, memory, pattern);
  if (!(nbar > 0.0) || !std::isfinite(nbar)) throw ValidationError("nbar must be finite and > 0");
  return [model, nbar](double eta, double y) { return rate(InputStrategy(eta, y, nbar), model); };
}

}  // namespace detail

/// max_y R(eta, y) at fixed eta.
inline FixedEtaResult optimize_rate_fixed_eta(double nbar, double thermal, double memory,
                                              NoisePattern pattern, double eta,
                                              const OptimizerOptions &options = {}) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw ValidationError("eta must lie in [0, 1]");
  detail::RateSearch search(detail::rate_objective(nbar, thermal, memory, pattern), options);
  const detail::Candidate best = search.best_over_y(eta);
  return FixedEtaResult{best.y, best.rate, search.evaluations(), search.converged()};
}

/// Maximizes R over the box and reports the gain over unentangled inputs.
inline OptimizationResult optimize_rate(double nbar, double thermal, double memory,
                                        NoisePattern pattern,
                                        const OptimizerOptions &options = {}) {
  detail::RateSearch search(detail::rate_objective(nbar, thermal, memory, pattern), options);
  const detail::Candidate seed = search.grid_argmax();
  detail::Candidate best = search.refine(seed);
  const detail::Candidate product = search.best_over_y(0.0);
  // The eta = 0 slice belongs to the box.
  if (detail::preferred(product, best, 0.0)) best = product;
  if (!(product.rate > 0.0)) {
    throw DomainError("rate without entanglement vanishes; capacity gain undefined");
  }

  OptimizationResult result;
  result.eta_star = best.eta;
  result.y_star = best.y;
  result.rate_star = best.rate;
  result.rate_eta0 = product.rate;
  result.y_eta0 = product.y;
  result.gain = best.rate / product.rate;
  result.evaluations = search.evaluations();
  result.converged = search.converged();
  return result;
}

/// G = max_{eta,y} R(eta, y) / max_y R(0, y).
inline double capacity_gain(double nbar, double thermal, double memory, NoisePattern pattern,
                            const OptimizerOptions &options = {}) {
  return optimize_rate(nbar, thermal, memory, pattern, options).gain;
}

}  // namespace memchan

#endif  // MEMCHAN_OPTIMIZER_HPP

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

#ifndef MEMCHAN_TOOLS_CLI_HPP
#define MEMCHAN_TOOLS_CLI_HPP

// `memchan <rate|optimize|contour|sweep-nbar> [flags]`
//
// Exit codes: 0 success, 1 domain or runtime error, 2 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "memchan/memchan.hpp"

namespace memchan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  double nbar = 1.0;
  std::optional<double> noise;
  std::optional<double> snr;
  double memory = 0.0;
  std::string pattern = "phase-sensitive";
  double eta = 0.0;
  double y = 0.0;
  int grid_eta = 101;
  int grid_y = 101;
  std::vector<double> x_list{0.0, 0.7, 0.9, 1.0};
  NbarRange nbar_range;
  std::optional<double> tolerance;
  std::string out_path;

  /// N from --snr (N = nbar / snr), else --noise, else 1/3.
  double thermal() const {
    if (snr) {
      if (!(*snr > 0.0)) throw ValidationError("--snr must be > 0");
      return nbar / *snr;
    }
    return noise.value_or(1.0 / 3.0);
  }

  OptimizerOptions optimizer_options() const {
    OptimizerOptions options;
    if (tolerance) options.rate_tolerance = *tolerance;
    return options;
  }

  NoisePattern noise_pattern() const { return parse_noise_pattern(pattern); }
};

namespace detail {

inline void write_rate(std::ostream &out, const RunConfig &config) {
  const NoiseModel model(config.thermal(), config.memory, config.noise_pattern());
  const InputStrategy strategy(config.eta, config.y, config.nbar);
  const RatePoint point = rate_generic(strategy, model);
  out << "rate_bits_per_mode: " << format_number(point.rate_bits_per_mode) << '\n'
      << "lambda_out: " << format_number(point.lambda_out[0]) << ' '
      << format_number(point.lambda_out[1]) << '\n'
      << "lambda_mix: " << format_number(point.lambda_mix[0]) << ' '
      << format_number(point.lambda_mix[1]) << '\n'
      << "squeezing_db: " << format_number(squeezing_db(config.eta, config.nbar)) << '\n';
}

inline void write_optimum(std::ostream &out, const RunConfig &config) {
  const OptimizationResult r = optimize_rate(config.nbar, config.thermal(), config.memory,
                                             config.noise_pattern(), config.optimizer_options());
  out << "eta_star: " << format_fixed(r.eta_star, 3) << '\n'
      << "y_star: " << format_fixed(r.y_star, 3) << '\n'
      << "rate_star: " << format_number(r.rate_star) << '\n'
      << "rate_eta0: " << format_number(r.rate_eta0) << '\n'
      << "gain: " << format_number(r.gain) << '\n'
      << "squeezing_db: " << format_number(squeezing_db(r.eta_star, config.nbar)) << '\n'
      << "evaluations: " << r.evaluations << '\n'
      << "converged: " << (r.converged ? "true" : "false") << '\n';
}

/// Writes through `emit` to --out, or to `out` when no path was given.
template <class Emit>
void write_csv(std::ostream &out, const std::string &path, Emit &&emit) {
  if (path.empty()) {
    emit(out);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit(file);
  file.flush();
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
  RunConfig config;
  CLI::App app{"Classical rates of bosonic Gaussian channels with correlated noise", "memchan"};
  app.require_subcommand(1);

  const auto add_channel = [&config](CLI::App *cmd) {
    cmd->add_option("--nbar", config.nbar, "Mean input photon number per mode")
        ->check(CLI::PositiveNumber);
    auto *noise = cmd->add_option("--noise", config.noise, "Thermal noise photons N (default 1/3)")
                      ->check(CLI::NonNegativeNumber);
    auto *snr = cmd->add_option("--snr", config.snr, "Signal-to-noise ratio; sets N = nbar/snr")
                    ->check(CLI::PositiveNumber);
    noise->excludes(snr);
    cmd->add_option("--memory", config.memory, "Memory coefficient x")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--pattern", config.pattern, "Noise correlation pattern")
        ->check(CLI::IsMember({"phase-sensitive", "symmetric"}));
    cmd->add_option("--tol", config.tolerance, "Optimizer rate tolerance (bits)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App *rate_cmd = app.add_subcommand("rate", "Evaluate R(eta, y)");
  add_channel(rate_cmd);
  rate_cmd->add_option("--eta", config.eta, "Degree of entanglement");
  rate_cmd->add_option("--y", config.y, "Classical correlation coefficient");

  CLI::App *optimize_cmd = app.add_subcommand("optimize", "Maximize R over (eta, y)");
  add_channel(optimize_cmd);

  CLI::App *contour_cmd = app.add_subcommand("contour", "Write R over the (eta, y) box as CSV");
  add_channel(contour_cmd);
  contour_cmd->add_option("--grid-eta", config.grid_eta, "Grid points along eta")
      ->check(CLI::Range(2, 100000));
  contour_cmd->add_option("--grid-y", config.grid_y, "Grid points along y")
      ->check(CLI::Range(2, 100000));
  contour_cmd->add_option("--out", config.out_path, "Output CSV path (default stdout)");

  CLI::App *sweep_cmd =
      app.add_subcommand("sweep-nbar", "Optimize over a range of nbar at fixed SNR");
  add_channel(sweep_cmd);
  sweep_cmd->add_option("--x-list", config.x_list, "Memory coefficients")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--nbar-min", config.nbar_range.min)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--nbar-max", config.nbar_range.max)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--nbar-steps", config.nbar_range.steps)->check(CLI::Range(2, 100000));
  sweep_cmd->add_flag("--log-scale,!--linear-scale", config.nbar_range.log_scale,
                      "Logarithmic nbar spacing (default) or linear");
  sweep_cmd->add_option("--out", config.out_path, "Output CSV path (default stdout)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << '\n' << "run 'memchan --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (rate_cmd->parsed()) {
      detail::write_rate(out, config);
    } else if (optimize_cmd->parsed()) {
      detail::write_optimum(out, config);
    } else if (contour_cmd->parsed()) {
      const auto rows = contour_grid(config.nbar, config.thermal(), config.memory,
                                     config.noise_pattern(), config.grid_eta, config.grid_y);
      detail::write_csv(out, config.out_path,
                        [&](std::ostream &os) { write_contour_csv(os, rows); });
    } else if (sweep_cmd->parsed()) {
      if (!sweep_cmd->count("--snr") && !sweep_cmd->count("--noise")) config.snr = 3.0;
      if (!config.snr) throw ValidationError("sweep-nbar takes --snr, not --noise");
      const auto records = sweep_nbar(*config.snr, config.x_list, config.nbar_range,
                                      config.noise_pattern(), config.optimizer_options());
      detail::write_csv(out, config.out_path,
                        [&](std::ostream &os) { write_sweep_csv(os, records); });
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace memchan::cli

#endif  // MEMCHAN_TOOLS_CLI_HPP

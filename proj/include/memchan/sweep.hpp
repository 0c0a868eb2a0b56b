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

#ifndef MEMCHAN_SWEEP_HPP
#define MEMCHAN_SWEEP_HPP

// Contour grids and fixed-SNR sweeps, with their CSV encoding.
//
// CSV: comma separated, '\n' line ends, '.' decimal point independent of the
// locale, numbers in shortest-general form with 9 significant digits.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <thread>
#include <vector>

#include "memchan/channel.hpp"
#include "memchan/errors.hpp"
#include "memchan/optimizer.hpp"
#include "memchan/rate.hpp"

namespace memchan {

inline constexpr std::string_view kContourHeader = "eta,y,rate";
inline constexpr std::string_view kSweepHeader =
    "nbar,N,x,pattern,eta_star,y_star,rate_star,rate_eta0,gain,squeezing_db";

inline std::string format_number(double value, int significant_digits = 9) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                       std::chars_format::general, significant_digits);
  if (ec != std::errc{}) throw NumericalError("number formatting failed");
  return std::string(buffer, end);
}

/// Fixed-point rendering with `decimals` digits after the point.
inline std::string format_fixed(double value, int decimals) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                       std::chars_format::fixed, decimals);
  if (ec != std::errc{}) throw NumericalError("number formatting failed");
  return std::string(buffer, end);
}

inline double parse_number(std::string_view text) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw ValidationError("malformed number '" + std::string(text) + "'");
  }
  return value;
}

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

struct ContourRow {
  double eta = 0.0;
  double y = 0.0;
  double rate = 0.0;
};

/// R over a grid_eta x grid_y lattice of the box, row-major in eta then y.
inline std::vector<ContourRow> contour_grid(double nbar, double thermal, double memory,
                                            NoisePattern pattern, int grid_eta, int grid_y) {
  if (grid_eta < 2 || grid_y < 2) throw ValidationError("contour grids need at least 2 points");
  const NoiseModel model(thermal, memory, pattern);
  std::vector<ContourRow> rows;
  rows.reserve(static_cast<std::size_t>(grid_eta) * static_cast<std::size_t>(grid_y));
  for (int i = 0; i < grid_eta; ++i) {
    const double eta = detail::grid_point(0.0, 1.0, i, grid_eta);
    for (int j = 0; j < grid_y; ++j) {
      const double y = detail::grid_point(-1.0, 1.0, j, grid_y);
      rows.push_back({eta, y, rate(InputStrategy(eta, y, nbar), model)});
    }
  }
  return rows;
}

inline void write_contour_csv(std::ostream &out, const std::vector<ContourRow> &rows) {
  out << kContourHeader << '\n';
  for (const ContourRow &row : rows) {
    out << format_number(row.eta) << ',' << format_number(row.y) << ','
        << format_number(row.rate) << '\n';
  }
}

struct NbarRange {
  double min = 0.01;
  double max = 100.0;
  int steps = 50;
  bool log_scale = true;

  std::vector<double> values() const {
    if (!(min > 0.0) || !(max > min) || !std::isfinite(max)) {
      throw ValidationError("nbar range must satisfy 0 < min < max");
    }
    if (steps < 2) throw ValidationError("nbar range needs at least 2 steps");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
      if (i == steps - 1) {
        out.push_back(max);
      } else if (log_scale) {
        const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
        out.push_back(std::exp(std::log(min) + t * (std::log(max) - std::log(min))));
      } else {
        out.push_back(detail::grid_point(min, max, i, steps));
      }
    }
    return out;
  }
};

struct SweepRecord {
  double nbar = 0.0;
  double thermal = 0.0;
  double memory = 0.0;
  NoisePattern pattern = NoisePattern::PhaseSensitive;
  double eta_star = 0.0;
  double y_star = 0.0;
  double rate_star = 0.0;
  double rate_eta0 = 0.0;
  double gain = 1.0;
  double squeezing_db = 0.0;
};

inline SweepRecord make_sweep_record(double nbar, double thermal, double memory,
                                     NoisePattern pattern, const OptimizerOptions &options) {
  const OptimizationResult opt = optimize_rate(nbar, thermal, memory, pattern, options);
  return SweepRecord{nbar,          thermal,        memory,        pattern,
                     opt.eta_star,  opt.y_star,     opt.rate_star, opt.rate_eta0,
                     opt.gain,      squeezing_db(opt.eta_star, nbar)};
}

/// For each x in `memories` (outer) and each nbar in `range` (inner), sets
/// N = nbar / snr and optimizes. Points run concurrently; the output order is
/// the parameter order.
inline std::vector<SweepRecord> sweep_nbar(double snr, const std::vector<double> &memories,
                                           const NbarRange &range, NoisePattern pattern,
                                           const OptimizerOptions &options = {}) {
  if (!(snr > 0.0) || !std::isfinite(snr)) throw ValidationError("snr must be finite and > 0");
  if (memories.empty()) throw ValidationError("memory list is empty");
  const std::vector<double> nbars = range.values();
  for (double x : memories) NoiseModel(0.0, x, pattern);  // validates x up front

  struct Task {
    double nbar;
    double memory;
  };
  std::vector<Task> tasks;
  tasks.reserve(memories.size() * nbars.size());
  for (double x : memories) {
    for (double nbar : nbars) tasks.push_back({nbar, x});
  }

  std::vector<SweepRecord> records(tasks.size());
  std::vector<std::exception_ptr> failures(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        records[i] = make_sweep_record(tasks[i].nbar, tasks[i].nbar / snr, tasks[i].memory,
                                       pattern, options);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, tasks.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::thread &t : pool) t.join();
  for (const std::exception_ptr &failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return records;
}

inline void write_sweep_csv(std::ostream &out, const std::vector<SweepRecord> &records) {
  out << kSweepHeader << '\n';
  for (const SweepRecord &r : records) {
    out << format_number(r.nbar) << ',' << format_number(r.thermal) << ','
        << format_number(r.memory) << ',' << to_string(r.pattern) << ','
        << format_number(r.eta_star) << ',' << format_number(r.y_star) << ','
        << format_number(r.rate_star) << ',' << format_number(r.rate_eta0) << ','
        << format_number(r.gain) << ',' << format_number(r.squeezing_db) << '\n';
  }
}

inline std::vector<SweepRecord> read_sweep_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) {
    throw ValidationError("sweep CSV header does not match");
  }
  std::vector<SweepRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 10) throw ValidationError("sweep CSV row has wrong field count");
    records.push_back(SweepRecord{parse_number(f[0]), parse_number(f[1]), parse_number(f[2]),
                                  parse_noise_pattern(f[3]), parse_number(f[4]),
                                  parse_number(f[5]), parse_number(f[6]), parse_number(f[7]),
                                  parse_number(f[8]), parse_number(f[9])});
  }
  return records;
}

inline std::vector<ContourRow> read_contour_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) || line != kContourHeader) {
    throw ValidationError("contour CSV header does not match");
  }
  std::vector<ContourRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 3) throw ValidationError("contour CSV row has wrong field count");
    rows.push_back({parse_number(f[0]), parse_number(f[1]), parse_number(f[2])});
  }
  return rows;
}

}  // namespace memchan

#endif  // MEMCHAN_SWEEP_HPP

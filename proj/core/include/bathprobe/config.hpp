#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bathprobe/sweep.hpp"

namespace bathprobe {

/// Every knob the command-line front end understands. Unset fields fall back
/// to per-command defaults. A JSON config uses the same names with
/// underscores, e.g. {"quantity": "chernoff", "grid": 51, "x_min": 0.05}.
///
/// Temperatures are physical inverse temperatures (beta omega = beta * omega)
/// and times are physical times (tau = gamma * t). x and y, when given,
/// take precedence over beta_f and beta_b.
struct Settings {
  std::optional<std::string> quantity;
  std::optional<int> grid;
  std::optional<double> x_min, x_max, y_min, y_max;
  std::optional<double> beta_b, beta_f;
  std::optional<double> x, y;
  std::optional<double> omega, gamma;
  std::optional<std::vector<double>> az0;
  std::optional<double> tau_max;
  std::optional<int> tau_steps;
  std::optional<std::vector<int>> copies;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<unsigned> jobs;
  std::optional<int> repetitions;
  std::optional<std::string> truth;

  /// Fields set in `over` replace those in *this.
  void overlay(const Settings& over);
};

/// Throws ConfigError on malformed JSON, unknown keys or wrongly typed values.
Settings parse_settings_json(const std::string& text);
Settings load_settings_file(const std::string& path);

SweepConfig to_sweep_config(const Settings& s);
TimeSeriesConfig to_timeseries_config(const Settings& s);
BayesRunConfig to_bayes_run_config(const Settings& s);

/// (beta_f omega, beta_b omega) from either x/y or beta_f/beta_b and omega.
struct PairParameters {
  double beta_f_omega;
  double beta_b_omega;
};
PairParameters pair_parameters(const Settings& s);

}  // namespace bathprobe

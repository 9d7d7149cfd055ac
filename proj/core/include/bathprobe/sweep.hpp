#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bathprobe/optimal_probing.hpp"

namespace bathprobe {

inline constexpr std::uint64_t kDefaultSeed = 12345;

enum class SweepQuantity { HelstromExcited, Chernoff, BayesRescaled, FullOptimize };
enum class SeriesQuantity { SigmaZ, Helstrom, Delta };

// Names accepted on the command line: helstrom-excited, chernoff,
// bayes-rescaled, full-optimize; sigma-z, helstrom, delta.
SweepQuantity parse_sweep_quantity(std::string_view name);
SeriesQuantity parse_series_quantity(std::string_view name);
std::string_view to_string(SweepQuantity q) noexcept;
std::string_view to_string(SeriesQuantity q) noexcept;

/// Grid over x = tanh(beta_f omega/2) (columns) and y = tanh(beta_b omega/2) (rows).
struct SweepConfig {
  SweepQuantity quantity = SweepQuantity::HelstromExcited;
  int grid_n = 101;
  double x_min = 0.01;
  double x_max = 0.99;
  double y_min = 0.01;
  double y_max = 0.99;
  int n_copies = 10;     // N for BayesRescaled
  int tau_steps = 200;   // time-scan resolution for Chernoff and BayesRescaled
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  unsigned jobs = 0;     // 0 = all hardware threads

  void validate() const;  // throws ConfigError
};

struct SweepRow {
  double x = 0.0;
  double y = 0.0;
  double tau_bar = 0.0;
  double az0_bar = 1.0;
  double value = 0.0;
  Branch branch = Branch::EndpointPlus;
};

/// Rows in row-major order: y outer, x inner.
std::vector<SweepRow> compute_sweep(const SweepConfig& config);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void run_sweep(const SweepConfig& config);

struct TimeSeriesConfig {
  SeriesQuantity quantity = SeriesQuantity::SigmaZ;
  double beta_b_omega = 1.0;
  double beta_f_omega = 1.0;
  std::vector<double> az0{1.0};
  double tau_max = 5.0;
  int tau_steps = 101;          // tau_k = k * tau_max / (tau_steps - 1)
  std::vector<int> copies{10, 100};
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  unsigned jobs = 0;

  void validate() const;
  std::vector<double> tau_grid() const;
};

struct SeriesRow {
  double tau = 0.0;
  std::string label;
  double value = 0.0;
  std::optional<int> n;  // Delta only
};

/// One block of rows per curve label, each block ordered by tau.
std::vector<SeriesRow> compute_timeseries(const TimeSeriesConfig& config);
void write_timeseries_csv(std::ostream& out, SeriesQuantity quantity,
                          const std::vector<SeriesRow>& rows);
void run_timeseries(const TimeSeriesConfig& config);

struct CriticalCurveRow {
  double y = 0.0;
  std::optional<CriticalPoint> point;
};

std::vector<CriticalCurveRow> compute_critical_curve(double y_min, double y_max, int n,
                                                     unsigned jobs = 0);
void write_critical_curve_csv(std::ostream& out, const std::vector<CriticalCurveRow>& rows);

enum class Truth { Bosonic, Fermionic, Both };
Truth parse_truth(std::string_view name);

struct BayesRunConfig {
  double beta_b_omega = 0.5;
  double beta_f_omega = 0.5;
  double az0 = 1.0;
  double tau_max = 3.0;
  int tau_steps = 31;
  int n_shots = 100;
  int repetitions = 1000;
  Truth truth = Truth::Both;
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  unsigned jobs = 0;

  void validate() const;
};

struct BayesRunRow {
  double tau = 0.0;
  std::uint64_t n_correct = 0;
  std::uint64_t n_wrong = 0;
};

/// Tallies per tau. Bosonic-truth trials draw from substream(seed, 0) and
/// fermionic-truth trials from substream(seed, 1), identically at every tau.
std::vector<BayesRunRow> compute_bayes_run(const BayesRunConfig& config);
void write_bayes_run_csv(std::ostream& out, const std::vector<BayesRunRow>& rows);

/// Time optimum of a figure of merit to be minimized, scanning a log grid on
/// [kTauSearchMin, kTauSearchMax] with golden-section refinement, then
/// comparing against the tau = infinity value. Ties go to the finite time.
struct TimeOptimum {
  double tau = 0.0;
  double value = 0.0;
};
TimeOptimum minimize_over_time(const std::function<double(double)>& objective, int n_grid);

/// 17 significant digits; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double v);

/// Writes `text` to `path`, throwing ConfigError if the file cannot be opened.
void write_file(const std::string& path, const std::string& text);

}  // namespace bathprobe

#include "bathprobe/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "bathprobe/bayesian.hpp"
#include "bathprobe/distinguishability.hpp"
#include "bathprobe/dynamics.hpp"
#include "bathprobe/errors.hpp"
#include "bathprobe/numerics.hpp"
#include "bathprobe/parallel.hpp"
#include "bathprobe/rng.hpp"

namespace bathprobe {

SweepQuantity parse_sweep_quantity(std::string_view name) {
  if (name == "helstrom-excited") return SweepQuantity::HelstromExcited;
  if (name == "chernoff") return SweepQuantity::Chernoff;
  if (name == "bayes-rescaled") return SweepQuantity::BayesRescaled;
  if (name == "full-optimize") return SweepQuantity::FullOptimize;
  throw ConfigError("unknown sweep quantity '" + std::string(name) + "'");
}

SeriesQuantity parse_series_quantity(std::string_view name) {
  if (name == "sigma-z") return SeriesQuantity::SigmaZ;
  if (name == "helstrom") return SeriesQuantity::Helstrom;
  if (name == "delta") return SeriesQuantity::Delta;
  throw ConfigError("unknown time-series quantity '" + std::string(name) + "'");
}

std::string_view to_string(SweepQuantity q) noexcept {
  switch (q) {
    case SweepQuantity::HelstromExcited:
      return "helstrom-excited";
    case SweepQuantity::Chernoff:
      return "chernoff";
    case SweepQuantity::BayesRescaled:
      return "bayes-rescaled";
    case SweepQuantity::FullOptimize:
      return "full-optimize";
  }
  return "?";
}

std::string_view to_string(SeriesQuantity q) noexcept {
  switch (q) {
    case SeriesQuantity::SigmaZ:
      return "sigma-z";
    case SeriesQuantity::Helstrom:
      return "helstrom";
    case SeriesQuantity::Delta:
      return "delta";
  }
  return "?";
}

Truth parse_truth(std::string_view name) {
  if (name == "bosonic") return Truth::Bosonic;
  if (name == "fermionic") return Truth::Fermionic;
  if (name == "both") return Truth::Both;
  throw ConfigError("unknown truth '" + std::string(name) + "' (bosonic, fermionic, both)");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  out << text;
  out.flush();
  if (!out) throw ConfigError("failed writing output file '" + path + "'");
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

void check_open_range(double lo, double hi, const char* axis) {
  const std::string a(axis);
  require(lo > 0.0 && hi < 1.0, a + " range must lie strictly inside (0, 1)");
  require(lo < hi, a + "-min must be smaller than " + a + "-max");
}

}  // namespace

TimeOptimum minimize_over_time(const std::function<double(double)>& objective, int n_grid) {
  const auto grid = numerics::logspace(kTauSearchMin, kTauSearchMax, static_cast<std::size_t>(n_grid));
  const numerics::Extremum best =
      numerics::scan_and_refine_maximum([&](double t) { return -objective(t); }, grid, 1e-10);
  const double at_infinity = objective(numerics::kInfinity);
  if (at_infinity < -best.value) return {numerics::kInfinity, at_infinity};
  return {best.arg, -best.value};
}

void SweepConfig::validate() const {
  require(grid_n >= 2, "grid must have at least 2 points per axis");
  check_open_range(x_min, x_max, "x");
  check_open_range(y_min, y_max, "y");
  require(y_max <= 0.99, "y-max must be <= 0.99");
  require(n_copies >= 1, "copies must be >= 1");
  require(tau_steps >= 10, "tau-steps must be >= 10");
}

namespace {

SweepRow sweep_cell(const SweepConfig& c, double x, double y) {
  SweepRow row{x, y, 0.0, 1.0, 0.0, Branch::EndpointPlus};
  const BlochVector excited = BlochVector::excited();
  auto finish_excited = [&](double tau, double value) {
    row.tau_bar = tau;
    row.value = value;
    row.branch = std::isinf(tau) ? Branch::SteadyState : Branch::EndpointPlus;
  };

  switch (c.quantity) {
    case SweepQuantity::HelstromExcited: {
      const ExcitedOptimum opt = optimal_time_excited(x, y);
      finish_excited(opt.tau_bar, opt.h_bar);
      break;
    }
    case SweepQuantity::Chernoff: {
      const DiscriminationPair pair = DiscriminationPair::from_xy(x, y);
      const TimeOptimum opt = minimize_over_time(
          [&](double tau) {
            return chernoff(DensityMatrix2::from_bloch(evolve(excited, pair.bosonic(), tau)),
                            DensityMatrix2::from_bloch(evolve(excited, pair.fermionic(), tau)))
                .q_value;
          },
          c.tau_steps);
      finish_excited(opt.tau, opt.value);
      break;
    }
    case SweepQuantity::BayesRescaled: {
      const DiscriminationPair pair = DiscriminationPair::from_xy(x, y);
      const TimeOptimum opt = minimize_over_time(
          [&](double tau) { return ideal_delta(pair, excited, tau, c.n_copies).delta; },
          c.tau_steps);
      finish_excited(opt.tau, 0.5 * std::pow(2.0 * opt.value, 1.0 / c.n_copies));
      break;
    }
    case SweepQuantity::FullOptimize: {
      const OptimizationResult opt = full_optimize(x, y);
      row.tau_bar = opt.tau_bar;
      row.az0_bar = opt.az0_bar;
      row.value = opt.h_bar;
      row.branch = opt.branch;
      break;
    }
  }
  return row;
}

}  // namespace

std::vector<SweepRow> compute_sweep(const SweepConfig& config) {
  config.validate();
  const auto n = static_cast<std::size_t>(config.grid_n);
  const auto xs = numerics::linspace(config.x_min, config.x_max, n);
  const auto ys = numerics::linspace(config.y_min, config.y_max, n);
  std::vector<SweepRow> rows(n * n);
  parallel_for(rows.size(), config.jobs, [&](std::size_t k) {
    rows[k] = sweep_cell(config, xs[k % n], ys[k / n]);
  });
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "x,y,tau_bar,exp_neg_tau_bar,az0_bar,value,branch\n";
  for (const SweepRow& r : rows) {
    out << format_number(r.x) << ',' << format_number(r.y) << ',' << format_number(r.tau_bar)
        << ',' << format_number(std::exp(-r.tau_bar)) << ',' << format_number(r.az0_bar) << ','
        << format_number(r.value) << ',' << to_string(r.branch) << '\n';
  }
}

void run_sweep(const SweepConfig& config) {
  config.validate();
  require(!config.output.empty(), "sweep requires an output path");
  const auto rows = compute_sweep(config);
  std::ostringstream text;
  write_sweep_csv(text, rows);
  write_file(config.output, text.str());
}

void TimeSeriesConfig::validate() const {
  require(std::isfinite(tau_max) && tau_max > 0.0, "tau-max must be finite and > 0");
  require(tau_steps >= 2, "tau-steps must be >= 2");
  require(!az0.empty(), "at least one a_z(0) value is required");
  for (double a : az0) require(a >= -1.0 && a <= 1.0, "a_z(0) values must lie in [-1, 1]");
  if (quantity == SeriesQuantity::Delta) {
    require(!copies.empty(), "delta requires at least one N in copies");
    for (int c : copies) require(c >= 1, "copies must be >= 1");
  }
}

std::vector<double> TimeSeriesConfig::tau_grid() const {
  return numerics::linspace(0.0, tau_max, static_cast<std::size_t>(tau_steps));
}

namespace {

std::string az0_label(double az0) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "az0=%g", az0);
  return buf;
}

}  // namespace

std::vector<SeriesRow> compute_timeseries(const TimeSeriesConfig& config) {
  config.validate();
  const DiscriminationPair pair = DiscriminationPair::from_betas(config.beta_f_omega, config.beta_b_omega);
  const auto taus = config.tau_grid();

  struct Curve {
    std::string label;
    double az0;
    std::optional<int> n;
    std::optional<BathStatistics> bath;
  };
  std::vector<Curve> curves;
  for (double a : config.az0) {
    switch (config.quantity) {
      case SeriesQuantity::SigmaZ:
        curves.push_back({"bosonic:" + az0_label(a), a, std::nullopt, BathStatistics::Bosonic});
        curves.push_back({"fermionic:" + az0_label(a), a, std::nullopt, BathStatistics::Fermionic});
        break;
      case SeriesQuantity::Helstrom:
        curves.push_back({"helstrom:" + az0_label(a), a, std::nullopt, std::nullopt});
        break;
      case SeriesQuantity::Delta:
        for (int n : config.copies) curves.push_back({"delta:" + az0_label(a), a, n, std::nullopt});
        break;
    }
  }

  std::vector<SeriesRow> rows(curves.size() * taus.size());
  parallel_for(rows.size(), config.jobs, [&](std::size_t k) {
    const Curve& c = curves[k / taus.size()];
    const double tau = taus[k % taus.size()];
    const BlochVector a0 = BlochVector::pure(c.az0);
    double value = 0.0;
    switch (config.quantity) {
      case SeriesQuantity::SigmaZ:
        value = evolve(a0, pair.bath(*c.bath), tau).az();
        break;
      case SeriesQuantity::Helstrom:
        value = helstrom(a0, pair, tau);
        break;
      case SeriesQuantity::Delta:
        value = ideal_delta(pair, a0, tau, *c.n).delta;
        break;
    }
    rows[k] = {tau, c.label, value, c.n};
  });
  return rows;
}

void write_timeseries_csv(std::ostream& out, SeriesQuantity quantity,
                          const std::vector<SeriesRow>& rows) {
  const bool with_n = quantity == SeriesQuantity::Delta;
  out << (with_n ? "tau,quantity_label,value,N\n" : "tau,quantity_label,value\n");
  for (const SeriesRow& r : rows) {
    out << format_number(r.tau) << ',' << r.label << ',' << format_number(r.value);
    if (with_n) out << ',' << r.n.value_or(0);
    out << '\n';
  }
}

void run_timeseries(const TimeSeriesConfig& config) {
  config.validate();
  require(!config.output.empty(), "timeseries requires an output path");
  const auto rows = compute_timeseries(config);
  std::ostringstream text;
  write_timeseries_csv(text, config.quantity, rows);
  write_file(config.output, text.str());
}

std::vector<CriticalCurveRow> compute_critical_curve(double y_min, double y_max, int n,
                                                     unsigned jobs) {
  require(n >= 2, "grid must have at least 2 points");
  check_open_range(y_min, y_max, "y");
  const auto ys = numerics::linspace(y_min, y_max, static_cast<std::size_t>(n));
  std::vector<CriticalCurveRow> rows(ys.size());
  parallel_for(rows.size(), jobs, [&](std::size_t k) { rows[k] = {ys[k], critical_point(ys[k])}; });
  return rows;
}

void write_critical_curve_csv(std::ostream& out, const std::vector<CriticalCurveRow>& rows) {
  out << "y,x_c,tau_c\n";
  const double nan = std::nan("");
  for (const CriticalCurveRow& r : rows) {
    out << format_number(r.y) << ',' << format_number(r.point ? r.point->x_c : nan) << ','
        << format_number(r.point ? r.point->tau_c : nan) << '\n';
  }
}

void BayesRunConfig::validate() const {
  require(std::isfinite(tau_max) && tau_max > 0.0, "tau-max must be finite and > 0");
  require(tau_steps >= 2, "tau-steps must be >= 2");
  require(az0 >= -1.0 && az0 <= 1.0, "a_z(0) must lie in [-1, 1]");
  require(n_shots >= 1, "number of shots must be >= 1");
  require(repetitions >= 1, "repetitions must be >= 1");
}

std::vector<BayesRunRow> compute_bayes_run(const BayesRunConfig& config) {
  config.validate();
  const DiscriminationPair pair = DiscriminationPair::from_betas(config.beta_f_omega, config.beta_b_omega);
  const auto taus = numerics::linspace(0.0, config.tau_max, static_cast<std::size_t>(config.tau_steps));
  const BlochVector a0 = BlochVector::pure(config.az0);

  std::vector<BayesRunRow> rows(taus.size());
  parallel_for(rows.size(), config.jobs, [&](std::size_t k) {
    BayesRunRow row{taus[k], 0, 0};
    auto tally = [&](BathStatistics truth, std::uint64_t stream) {
      const auto sim = simulate_and_decide(KeyedUniform::substream(config.seed, stream),
                                           config.n_shots, truth, pair, a0, taus[k],
                                           config.repetitions, 1);
      row.n_correct += sim.n_correct;
      row.n_wrong += sim.n_wrong;
    };
    if (config.truth != Truth::Fermionic) tally(BathStatistics::Bosonic, 0);
    if (config.truth != Truth::Bosonic) tally(BathStatistics::Fermionic, 1);
    rows[k] = row;
  });
  return rows;
}

void write_bayes_run_csv(std::ostream& out, const std::vector<BayesRunRow>& rows) {
  out << "tau,n_correct,n_wrong\n";
  for (const BayesRunRow& r : rows) {
    out << format_number(r.tau) << ',' << r.n_correct << ',' << r.n_wrong << '\n';
  }
}

}  // namespace bathprobe

// bathprobe: sweeps, time series, critical curve, single-point optimization
// and Monte Carlo tallies for bosonic-vs-fermionic bath discrimination.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical-domain error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bathprobe/config.hpp"
#include "bathprobe/errors.hpp"
#include "bathprobe/optimal_probing.hpp"
#include "bathprobe/sweep.hpp"

namespace {

using namespace bathprobe;

constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;

template <typename T>
void bind_flag(CLI::App* app, const std::string& flag, std::optional<T>& slot, const std::string& help) {
  app->add_option_function<T>(flag, [&slot](const T& v) { slot = v; }, help);
}

template <typename T>
void bind_list_flag(CLI::App* app, const std::string& flag, std::optional<std::vector<T>>& slot,
               const std::string& help) {
  app->add_option_function<std::vector<T>>(flag, [&slot](const std::vector<T>& v) { slot = v; }, help)
      ->delimiter(',');
}

struct Common {
  std::string config_path;
  Settings flags;
};

void add_pair_flags(CLI::App* app, Settings& s) {
  bind_flag(app, "--beta-b", s.beta_b, "Bosonic inverse temperature beta_b");
  bind_flag(app, "--beta-f", s.beta_f, "Fermionic inverse temperature beta_f");
  bind_flag(app, "--x", s.x, "tanh(beta_f omega / 2); overrides --beta-f");
  bind_flag(app, "--y", s.y, "tanh(beta_b omega / 2); overrides --beta-b");
  bind_flag(app, "--omega", s.omega, "Energy scale omega (default 1)");
}

void add_io_flags(CLI::App* app, Common& c) {
  app->add_option("--config", c.config_path, "JSON config; flags override its fields");
  bind_flag(app, "--out", c.flags.out, "Output path");
  bind_flag(app, "--jobs", c.flags.jobs, "Worker threads (0 = all cores)");
  bind_flag(app, "--seed", c.flags.seed, "64-bit seed");
}

Settings resolve(const Common& c) {
  Settings s;
  if (!c.config_path.empty()) s = load_settings_file(c.config_path);
  s.overlay(c.flags);
  return s;
}

void emit(const std::string& text, const std::optional<std::string>& out) {
  if (out && !out->empty()) {
    write_file(*out, text);
  } else {
    std::cout << text;
  }
}

nlohmann::json to_json(double x, double y, const OptimizationResult& r) {
  auto number = [](double v) -> nlohmann::json {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
  };
  return {{"x", x},
          {"y", y},
          {"tau_bar", number(r.tau_bar)},
          {"exp_neg_tau_bar", std::exp(-r.tau_bar)},
          {"az0_bar", r.az0_bar},
          {"h_bar", r.h_bar},
          {"trace_distance", r.d_bar},
          {"branch", std::string(to_string(r.branch))},
          {"degenerate", r.degenerate}};
}

int run(int argc, char** argv) {
  CLI::App app{"Discriminate a bosonic from a fermionic thermal bath with a single-qubit probe"};
  app.require_subcommand(1);

  Common sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Optimum over an (x, y) grid -> CSV");
  add_io_flags(sweep, sweep_opts);
  bind_flag(sweep, "--quantity", sweep_opts.flags.quantity,
       "helstrom-excited | chernoff | bayes-rescaled | full-optimize");
  bind_flag(sweep, "--grid", sweep_opts.flags.grid, "Points per axis (default 101)");
  bind_flag(sweep, "--x-min", sweep_opts.flags.x_min, "Lower x bound");
  bind_flag(sweep, "--x-max", sweep_opts.flags.x_max, "Upper x bound");
  bind_flag(sweep, "--y-min", sweep_opts.flags.y_min, "Lower y bound");
  bind_flag(sweep, "--y-max", sweep_opts.flags.y_max, "Upper y bound (<= 0.99)");
  bind_flag(sweep, "--tau-steps", sweep_opts.flags.tau_steps, "Time-scan points for chernoff/bayes");
  bind_list_flag(sweep, "--copies", sweep_opts.flags.copies, "N for bayes-rescaled (first value used)");

  Common series_opts;
  auto* series = app.add_subcommand("timeseries", "Curves versus tau -> CSV");
  add_io_flags(series, series_opts);
  add_pair_flags(series, series_opts.flags);
  bind_flag(series, "--quantity", series_opts.flags.quantity, "sigma-z | helstrom | delta");
  bind_flag(series, "--gamma", series_opts.flags.gamma, "Dissipation rate gamma (default 1)");
  bind_list_flag(series, "--az0", series_opts.flags.az0, "Comma-separated a_z(0) values");
  bind_flag(series, "--tau-max", series_opts.flags.tau_max, "Final time t (tau = gamma t)");
  bind_flag(series, "--tau-steps", series_opts.flags.tau_steps, "Number of time points");
  bind_list_flag(series, "--copies", series_opts.flags.copies, "Comma-separated N values for delta");

  Common critical_opts;
  auto* critical = app.add_subcommand("critical-curve", "x_c(y), tau_c(y) -> CSV");
  add_io_flags(critical, critical_opts);
  bind_flag(critical, "--grid", critical_opts.flags.grid, "Number of y points (default 99)");
  bind_flag(critical, "--y-min", critical_opts.flags.y_min, "Lower y bound (default 0.01)");
  bind_flag(critical, "--y-max", critical_opts.flags.y_max, "Upper y bound (default 0.99)");

  Common optimize_opts;
  bool as_json = false;
  auto* optimize = app.add_subcommand("optimize", "Joint time/input optimum at one (x, y)");
  add_io_flags(optimize, optimize_opts);
  add_pair_flags(optimize, optimize_opts.flags);
  optimize->add_flag("--json", as_json, "Print JSON instead of the text summary");

  Common bayes_opts;
  auto* bayes = app.add_subcommand("bayes-run", "Monte Carlo decision tallies -> CSV");
  add_io_flags(bayes, bayes_opts);
  add_pair_flags(bayes, bayes_opts.flags);
  bind_flag(bayes, "--gamma", bayes_opts.flags.gamma, "Dissipation rate gamma (default 1)");
  bind_list_flag(bayes, "--az0", bayes_opts.flags.az0, "Input a_z(0) (first value used)");
  bind_flag(bayes, "--tau-max", bayes_opts.flags.tau_max, "Final time t (tau = gamma t)");
  bind_flag(bayes, "--tau-steps", bayes_opts.flags.tau_steps, "Number of time points");
  bind_list_flag(bayes, "--copies", bayes_opts.flags.copies, "Shots per trial (first value used)");
  bind_flag(bayes, "--repetitions", bayes_opts.flags.repetitions, "Trials per time point");
  bind_flag(bayes, "--truth", bayes_opts.flags.truth, "bosonic | fermionic | both");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (*sweep) {
    run_sweep(to_sweep_config(resolve(sweep_opts)));
  } else if (*series) {
    const Settings s = resolve(series_opts);
    TimeSeriesConfig c = to_timeseries_config(s);
    std::ostringstream text;
    write_timeseries_csv(text, c.quantity, compute_timeseries(c));
    emit(text.str(), s.out);
  } else if (*critical) {
    const Settings s = resolve(critical_opts);
    const auto rows = compute_critical_curve(s.y_min.value_or(0.01), s.y_max.value_or(0.99),
                                             s.grid.value_or(99), s.jobs.value_or(0));
    std::ostringstream text;
    write_critical_curve_csv(text, rows);
    emit(text.str(), s.out);
  } else if (*optimize) {
    const Settings s = resolve(optimize_opts);
    const PairParameters p = pair_parameters(s);
    const double x = std::tanh(0.5 * p.beta_f_omega);
    const double y = std::tanh(0.5 * p.beta_b_omega);
    const OptimizationResult r = full_optimize(x, y);
    const nlohmann::json j = to_json(x, y, r);
    if (as_json) {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "x = tanh(beta_f omega/2) = " << format_number(x) << '\n'
                << "y = tanh(beta_b omega/2) = " << format_number(y) << '\n'
                << "optimal time tau_bar     = " << format_number(r.tau_bar) << '\n'
                << "optimal input a_z(0)     = " << format_number(r.az0_bar) << '\n'
                << "minimal Helstrom error   = " << format_number(r.h_bar) << '\n'
                << "branch                   = " << to_string(r.branch)
                << (r.degenerate ? " (degenerate)" : "") << '\n';
    }
    if (s.out) write_file(*s.out, j.dump(2) + "\n");
  } else if (*bayes) {
    const Settings s = resolve(bayes_opts);
    std::ostringstream text;
    write_bayes_run_csv(text, compute_bayes_run(to_bayes_run_config(s)));
    emit(text.str(), s.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bathprobe::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const bathprobe::DomainError& e) {
    std::cerr << "numerical domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

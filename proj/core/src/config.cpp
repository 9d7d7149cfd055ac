#include "bathprobe/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bathprobe/errors.hpp"

namespace bathprobe {

namespace {

template <typename T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

template <typename T>
T get_as(const nlohmann::json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

template <typename T>
std::vector<T> list_as(const nlohmann::json& value, const std::string& key) {
  if (!value.is_array()) return {get_as<T>(value, key)};
  return get_as<std::vector<T>>(value, key);
}

}  // namespace

void Settings::overlay(const Settings& o) {
  take(quantity, o.quantity);
  take(grid, o.grid);
  take(x_min, o.x_min);
  take(x_max, o.x_max);
  take(y_min, o.y_min);
  take(y_max, o.y_max);
  take(beta_b, o.beta_b);
  take(beta_f, o.beta_f);
  take(x, o.x);
  take(y, o.y);
  take(omega, o.omega);
  take(gamma, o.gamma);
  take(az0, o.az0);
  take(tau_max, o.tau_max);
  take(tau_steps, o.tau_steps);
  take(copies, o.copies);
  take(seed, o.seed);
  take(out, o.out);
  take(jobs, o.jobs);
  take(repetitions, o.repetitions);
  take(truth, o.truth);
}

Settings parse_settings_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  Settings s;
  for (const auto& [key, value] : doc.items()) {
    if (key == "quantity") s.quantity = get_as<std::string>(value, key);
    else if (key == "grid") s.grid = get_as<int>(value, key);
    else if (key == "x_min") s.x_min = get_as<double>(value, key);
    else if (key == "x_max") s.x_max = get_as<double>(value, key);
    else if (key == "y_min") s.y_min = get_as<double>(value, key);
    else if (key == "y_max") s.y_max = get_as<double>(value, key);
    else if (key == "beta_b") s.beta_b = get_as<double>(value, key);
    else if (key == "beta_f") s.beta_f = get_as<double>(value, key);
    else if (key == "x") s.x = get_as<double>(value, key);
    else if (key == "y") s.y = get_as<double>(value, key);
    else if (key == "omega") s.omega = get_as<double>(value, key);
    else if (key == "gamma") s.gamma = get_as<double>(value, key);
    else if (key == "az0") s.az0 = list_as<double>(value, key);
    else if (key == "tau_max") s.tau_max = get_as<double>(value, key);
    else if (key == "tau_steps") s.tau_steps = get_as<int>(value, key);
    else if (key == "copies") s.copies = list_as<int>(value, key);
    else if (key == "seed") s.seed = get_as<std::uint64_t>(value, key);
    else if (key == "out") s.out = get_as<std::string>(value, key);
    else if (key == "jobs") s.jobs = get_as<unsigned>(value, key);
    else if (key == "repetitions") s.repetitions = get_as<int>(value, key);
    else if (key == "truth") s.truth = get_as<std::string>(value, key);
    else throw ConfigError("unknown config key '" + key + "'");
  }
  return s;
}

Settings load_settings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_settings_json(text.str());
}

namespace {

double positive_scale(const std::optional<double>& v, const char* name) {
  const double s = v.value_or(1.0);
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw ConfigError(std::string(name) + " must be finite and > 0");
  }
  return s;
}

}  // namespace

PairParameters pair_parameters(const Settings& s) {
  auto from_tanh = [](double v, const char* name) {
    if (!(v >= 0.0 && v < 1.0)) throw ConfigError(std::string(name) + " must lie in [0, 1)");
    return 2.0 * std::atanh(v);
  };
  const double omega = positive_scale(s.omega, "omega");
  PairParameters p{};
  if (s.x) {
    p.beta_f_omega = from_tanh(*s.x, "x");
  } else if (s.beta_f) {
    p.beta_f_omega = *s.beta_f * omega;
  } else {
    throw ConfigError("fermionic bath requires --beta-f or --x");
  }
  if (s.y) {
    p.beta_b_omega = from_tanh(*s.y, "y");
  } else if (s.beta_b) {
    p.beta_b_omega = *s.beta_b * omega;
  } else {
    throw ConfigError("bosonic bath requires --beta-b or --y");
  }
  return p;
}

SweepConfig to_sweep_config(const Settings& s) {
  SweepConfig c;
  if (s.quantity) c.quantity = parse_sweep_quantity(*s.quantity);
  if (s.grid) c.grid_n = *s.grid;
  if (s.x_min) c.x_min = *s.x_min;
  if (s.x_max) c.x_max = *s.x_max;
  if (s.y_min) c.y_min = *s.y_min;
  if (s.y_max) c.y_max = *s.y_max;
  if (s.copies && !s.copies->empty()) c.n_copies = s.copies->front();
  if (s.tau_steps) c.tau_steps = *s.tau_steps;
  if (s.seed) c.seed = *s.seed;
  if (s.out) c.output = *s.out;
  if (s.jobs) c.jobs = *s.jobs;
  c.validate();
  return c;
}

TimeSeriesConfig to_timeseries_config(const Settings& s) {
  TimeSeriesConfig c;
  if (s.quantity) c.quantity = parse_series_quantity(*s.quantity);
  const PairParameters p = pair_parameters(s);
  c.beta_b_omega = p.beta_b_omega;
  c.beta_f_omega = p.beta_f_omega;
  if (s.az0) c.az0 = *s.az0;
  const double gamma = positive_scale(s.gamma, "gamma");
  if (s.tau_max) c.tau_max = *s.tau_max * gamma;
  if (s.tau_steps) c.tau_steps = *s.tau_steps;
  if (s.copies) c.copies = *s.copies;
  if (s.seed) c.seed = *s.seed;
  if (s.out) c.output = *s.out;
  if (s.jobs) c.jobs = *s.jobs;
  c.validate();
  return c;
}

BayesRunConfig to_bayes_run_config(const Settings& s) {
  BayesRunConfig c;
  const PairParameters p = pair_parameters(s);
  c.beta_b_omega = p.beta_b_omega;
  c.beta_f_omega = p.beta_f_omega;
  if (s.az0 && !s.az0->empty()) c.az0 = s.az0->front();
  const double gamma = positive_scale(s.gamma, "gamma");
  if (s.tau_max) c.tau_max = *s.tau_max * gamma;
  if (s.tau_steps) c.tau_steps = *s.tau_steps;
  if (s.copies && !s.copies->empty()) c.n_shots = s.copies->front();
  if (s.repetitions) c.repetitions = *s.repetitions;
  if (s.truth) c.truth = parse_truth(*s.truth);
  if (s.seed) c.seed = *s.seed;
  if (s.out) c.output = *s.out;
  if (s.jobs) c.jobs = *s.jobs;
  c.validate();
  return c;
}

}  // namespace bathprobe

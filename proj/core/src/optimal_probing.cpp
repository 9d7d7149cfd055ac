#include "bathprobe/optimal_probing.hpp"

#include <cmath>
#include <string>

#include "bathprobe/distinguishability.hpp"
#include "bathprobe/dynamics.hpp"
#include "bathprobe/errors.hpp"
#include "bathprobe/numerics.hpp"

namespace bathprobe {

namespace {

void check_xy(double x, double y, const char* where) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError(std::string(where) + ": x must lie in [0, 1)");
  }
  if (!(y > 0.0 && y < 1.0)) {
    throw DomainError(std::string(where) + ": y must lie in (0, 1); y = 1 is degenerate");
  }
}

// Smallest power-of-two multiple of `start` at which `f` turns negative.
template <typename Func>
std::optional<double> expand_upper_bracket(Func&& f, double start, double limit) {
  for (double hi = start; hi <= limit; hi *= 2.0) {
    if (f(hi) < 0.0) return hi;
  }
  return std::nullopt;
}

}  // namespace

CharacteristicTimes characteristic_times(double x, double y) {
  check_xy(x, y, "characteristic_times");
  CharacteristicTimes out;

  // t2: e^{-tau (1/y - 1)} = (1 + x) / (1 + 1/y); the left side is strictly
  // decreasing so the root is unique.
  const double target = (1.0 + x) * y / (1.0 + y);
  const double rate = 1.0 / y - 1.0;
  auto stationary = [&](double tau) { return std::exp(-tau * rate) - target; };
  if (auto hi = expand_upper_bracket(stationary, 1.0, 1e300)) {
    out.t2 = numerics::bisect(stationary, 0.0, *hi, 0.0);
  }

  // t1: (1 + x) / (1 + y) = (1 - e^{-tau/y}) / (1 - e^{-tau}). The right side
  // falls monotonically from 1/y to 1, so a crossing exists iff x > y.
  if (x > y) {
    const double level = (1.0 + x) / (1.0 + y);
    auto crossing = [&](double tau) { return std::expm1(-tau / y) / std::expm1(-tau) - level; };
    if (auto hi = expand_upper_bracket(crossing, 1.0, 1024.0)) {
      out.t1 = numerics::bisect(crossing, 1e-300, *hi, 0.0);
    }
  }
  return out;
}

ExcitedOptimum optimal_time_excited(double x, double y) {
  const CharacteristicTimes times = characteristic_times(x, y);
  const double t2 = *times.t2;
  // D(tau) = |(x - y) - E(tau)|, E = (1+x) e^{-tau} - (1+y) e^{-tau/y}; compare
  // through E(t2) rather than the two nearly equal distances.
  const double e_t2 =
      -(1.0 + x) * std::exp(-t2) * std::expm1(std::log((1.0 + y) / (1.0 + x)) - t2 * (1.0 / y - 1.0));
  const bool finite_wins = x <= y ? e_t2 >= 0.0 : e_t2 >= 2.0 * (x - y);
  if (finite_wins) {
    return {t2, 0.5 - 0.25 * excited_distance(t2, x, y)};
  }
  return {numerics::kInfinity, 0.5 - 0.25 * std::abs(x - y)};
}

CriticalResiduals critical_residuals(double x, double tau, double y) {
  const double e_f = std::exp(-tau);
  const double e_b = std::exp(-tau / y);
  return {(2.0 - e_f) * (1.0 + x) - (2.0 - e_b) * (1.0 + y),
          e_f * (1.0 + x) - e_b * (1.0 + y) / y};
}

std::optional<CriticalPoint> critical_point(double y) {
  if (!(y > 0.0 && y < 1.0)) throw DomainError("critical_point: y must lie in (0, 1)");

  // The slope equation fixes 1 + x = e^{tau (1 - 1/y)} (1 + y) / y; substituting
  // into the level equation leaves a scalar equation in tau.
  auto one_plus_x = [y](double tau) { return std::exp(tau * (1.0 - 1.0 / y)) * (1.0 + y) / y; };
  auto level = [&](double tau) {
    return (2.0 - std::exp(-tau)) * one_plus_x(tau) - (2.0 - std::exp(-tau / y)) * (1.0 + y);
  };
  const double lo = 0.0;
  const double hi = kTauSearchMax;
  if (std::signbit(level(lo)) == std::signbit(level(hi))) return std::nullopt;

  const double tau_c = numerics::bisect(level, lo, hi, 0.0);
  const double x_c = one_plus_x(tau_c) - 1.0;
  if (!(x_c >= 0.0 && x_c < 1.0) || !(tau_c > 0.0)) return std::nullopt;
  return CriticalPoint{x_c, tau_c};
}

double ParabolaCoeffs::d_squared(double az0) const noexcept {
  const double fm2 = f_minus * f_minus;
  return fm2 * (f_plus * f_plus - 1.0) * az0 * az0 + 2.0 * a_coeff * f_minus * f_plus * az0 +
         fm2 + a_coeff * a_coeff;
}

ParabolaCoeffs parabola_coeffs(double tau, double x, double y) {
  check_xy(x, y, "parabola_coeffs");
  if (std::isnan(tau) || tau < 0.0) throw DomainError("parabola_coeffs: tau must be >= 0");
  if (std::isinf(tau)) return {0.0, 0.0, y - x};

  const double e_half = std::exp(-0.5 * tau);
  // e^{-tau/2} - e^{-tau/(2y)} without cancellation at small tau.
  const double f_minus = -e_half * std::expm1(-0.5 * tau * (1.0 / y - 1.0));
  const double f_plus = e_half + std::exp(-0.5 * tau / y);
  const double a = x * std::expm1(-tau) - y * std::expm1(-tau / y);
  return {f_minus, f_plus, a};
}

std::string_view to_string(Branch b) noexcept {
  switch (b) {
    case Branch::Vertex:
      return "Vertex";
    case Branch::EndpointPlus:
      return "EndpointPlus";
    case Branch::EndpointMinus:
      return "EndpointMinus";
    case Branch::SteadyState:
      return "SteadyState";
  }
  return "?";
}

InputOptimum optimal_input_at_time(double tau, double x, double y) {
  if (!(tau > 0.0) || std::isinf(tau)) {
    throw DomainError("optimal_input_at_time: tau must be finite and > 0");
  }
  const ParabolaCoeffs c = parabola_coeffs(tau, x, y);
  const double fm = c.f_minus;
  const double fp = c.f_plus;
  const double a = c.a_coeff;
  const double curvature = 1.0 - fp * fp;

  if ((fm / fp) * curvature > std::abs(a)) {
    return {a * fp / (fm * curvature), fm * fm + a * a / curvature, Branch::Vertex, false};
  }
  const double cross = fp * fm;
  if (a > 0.0) return {1.0, (cross + a) * (cross + a), Branch::EndpointPlus, false};
  if (a < 0.0) return {-1.0, (cross - a) * (cross - a), Branch::EndpointMinus, false};
  return {1.0, cross * cross, Branch::EndpointPlus, true};
}

namespace {

// Finite and steady-state maxima closer than this (in D^2) are reported as a tie.
constexpr double kTieTolerance = 1e-14;

}  // namespace

OptimizationResult full_optimize(double x, double y) {
  check_xy(x, y, "full_optimize");
  static const std::vector<double> grid =
      numerics::logspace(kTauSearchMin, kTauSearchMax, kTauSearchPoints);

  const numerics::Extremum best = numerics::scan_and_refine_maximum(
      [&](double tau) { return optimal_input_at_time(tau, x, y).d_squared; }, grid, 1e-10);
  const InputOptimum at_best = optimal_input_at_time(best.arg, x, y);
  const double steady = (x - y) * (x - y);

  OptimizationResult r;
  if (at_best.d_squared > steady + kTieTolerance) {
    r.tau_bar = best.arg;
    r.az0_bar = at_best.az0_star;
    r.d_bar = std::sqrt(at_best.d_squared);
    r.branch = at_best.branch;
  } else {
    r.tau_bar = numerics::kInfinity;
    r.az0_bar = y >= x ? 1.0 : -1.0;
    r.d_bar = std::abs(x - y);
    r.branch = Branch::SteadyState;
    r.degenerate = std::abs(at_best.d_squared - steady) <= kTieTolerance;
  }
  r.h_bar = 0.5 - 0.25 * r.d_bar;
  return r;
}

OptimizationResult brute_force_optimize(double x, double y, int n_az, int n_tau) {
  check_xy(x, y, "brute_force_optimize");
  if (n_az < 100 || n_tau < 100) {
    throw DomainError("brute_force_optimize: grid sizes must be >= 100");
  }
  const DiscriminationPair pair = DiscriminationPair::from_xy(x, y);
  const auto taus = numerics::logspace(kTauSearchMin, kTauSearchMax, static_cast<std::size_t>(n_tau));
  const auto azs = numerics::linspace(-1.0, 1.0, static_cast<std::size_t>(n_az));

  OptimizationResult best;
  best.d_bar = -1.0;
  for (double tau : taus) {
    for (std::size_t k = 0; k < azs.size(); ++k) {
      const BlochVector a0 = BlochVector::pure(azs[k]);
      const double d = bloch_trace_distance(evolve(a0, pair.bosonic(), tau),
                                            evolve(a0, pair.fermionic(), tau));
      if (d > best.d_bar) {
        best.d_bar = d;
        best.tau_bar = tau;
        best.az0_bar = azs[k];
        best.branch = k == 0                 ? Branch::EndpointMinus
                      : k + 1 == azs.size() ? Branch::EndpointPlus
                                            : Branch::Vertex;
      }
    }
  }
  const double d_inf = bloch_trace_distance(steady_state(pair.bosonic()), steady_state(pair.fermionic()));
  if (d_inf > best.d_bar) {
    best.d_bar = d_inf;
    best.tau_bar = numerics::kInfinity;
    best.az0_bar = y >= x ? 1.0 : -1.0;
    best.branch = Branch::SteadyState;
  }
  best.h_bar = 0.5 - 0.25 * best.d_bar;
  return best;
}

}  // namespace bathprobe

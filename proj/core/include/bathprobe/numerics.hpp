#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "bathprobe/errors.hpp"

namespace bathprobe::numerics {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Bracketed bisection for a root of `f` on [lo, hi].
///
/// Requires f(lo) and f(hi) to have opposite signs (or one of them to vanish).
/// Iterates until the bracket is narrower than `tol` or cannot be split any
/// further in double precision.
template <typename Func>
double bisect(Func&& f, double lo, double hi, double tol = 1e-13) {
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw DomainError("bisect: root is not bracketed");
  }
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= tol || mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct Extremum {
  double arg = 0.0;
  double value = 0.0;
};

/// Golden-section search for the maximum of a unimodal `f` on [a, b].
template <typename Func>
Extremum golden_section_maximize(Func&& f, double a, double b, double tol = 1e-10) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  // The endpoints may beat the interior probes when the maximum sits on the
  // boundary of the original bracket.
  Extremum best{fc >= fd ? c : d, fc >= fd ? fc : fd};
  for (double p : {a, b, 0.5 * (a + b)}) {
    const double v = f(p);
    if (v > best.value) best = {p, v};
  }
  return best;
}

template <typename Func>
Extremum golden_section_minimize(Func&& f, double a, double b, double tol = 1e-10) {
  auto r = golden_section_maximize([&](double t) { return -f(t); }, a, b, tol);
  return {r.arg, -r.value};
}

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out[n - 1] = hi;
  return out;
}

inline std::vector<double> logspace(double lo, double hi, std::size_t n) {
  std::vector<double> out = linspace(std::log(lo), std::log(hi), n);
  for (double& v : out) v = std::exp(v);
  out.front() = lo;
  out.back() = hi;
  return out;
}

/// Dense scan of `f` over `grid` followed by golden-section refinement inside
/// the two cells neighbouring the best grid point.
template <typename Func>
Extremum scan_and_refine_maximum(Func&& f, const std::vector<double>& grid, double tol = 1e-10) {
  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = f(grid[i]);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[best + 1 < grid.size() ? best + 1 : best];
  Extremum refined = golden_section_maximize(f, lo, hi, tol);
  if (refined.value < best_value) refined = {grid[best], best_value};
  return refined;
}

}  // namespace bathprobe::numerics

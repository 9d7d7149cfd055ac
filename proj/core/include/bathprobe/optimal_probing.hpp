#pragma once

#include <optional>
#include <string_view>

namespace bathprobe {

// All functions in this header take the hypotheses in the (x, y) coordinates,
// x = tanh(beta_f omega / 2) in [0, 1) and y = tanh(beta_b omega / 2) in (0, 1).
// y = 1 (zero-temperature bosonic bath) is rejected: the bosonic and fermionic
// decay rates coincide there and the vertex formula degenerates.

/// Zeros of the excited-input distance (t1) and of its time derivative (t2).
struct CharacteristicTimes {
  std::optional<double> t1;  // present only when x > y
  std::optional<double> t2;  // present for every y < 1
};

CharacteristicTimes characteristic_times(double x, double y);

struct ExcitedOptimum {
  double tau_bar = 0.0;  // +infinity when the steady state wins
  double h_bar = 0.5;
};

/// Best measurement time for the excited input: interior maximum of the
/// distance at t2 against its steady-state value |x - y|. Ties go to t2.
ExcitedOptimum optimal_time_excited(double x, double y);

struct CriticalPoint {
  double x_c = 0.0;
  double tau_c = 0.0;
};

/// Point on the critical curve at fixed y, where the excited-input optimum
/// jumps from finite time to the steady state. Empty when the solution leaves
/// tau in (0, 50] or x in [0, 1).
std::optional<CriticalPoint> critical_point(double y);

/// Residuals of the two critical-curve equations at (x, tau).
struct CriticalResiduals {
  double level = 0.0;
  double slope = 0.0;
};
CriticalResiduals critical_residuals(double x, double tau, double y);

/// D^2(tau; a_z(0)) = f_-^2 (f_+^2 - 1) a^2 + 2 A f_- f_+ a + f_-^2 + A^2.
struct ParabolaCoeffs {
  double f_minus = 0.0;
  double f_plus = 2.0;
  double a_coeff = 0.0;

  double d_squared(double az0) const noexcept;
};

ParabolaCoeffs parabola_coeffs(double tau, double x, double y);

enum class Branch { Vertex, EndpointPlus, EndpointMinus, SteadyState };

std::string_view to_string(Branch b) noexcept;

struct InputOptimum {
  double az0_star = 1.0;
  double d_squared = 0.0;
  Branch branch = Branch::EndpointPlus;
  bool endpoints_equivalent = false;  // A == 0 outside the vertex branch
};

/// Optimal pure-input z component at a fixed finite tau > 0.
InputOptimum optimal_input_at_time(double tau, double x, double y);

struct OptimizationResult {
  double tau_bar = 0.0;  // may be +infinity
  double az0_bar = 1.0;
  double h_bar = 0.5;
  double d_bar = 0.0;  // trace distance at the optimum
  Branch branch = Branch::EndpointPlus;
  bool degenerate = false;  // finite and steady-state maxima coincide
};

inline constexpr double kTauSearchMin = 1e-3;
inline constexpr double kTauSearchMax = 50.0;
inline constexpr int kTauSearchPoints = 2000;

/// Joint optimum over measurement time and pure input state.
OptimizationResult full_optimize(double x, double y);

/// Exhaustive grid search over (a_z(0), tau) evaluated through the Bloch
/// dynamics, including the tau = infinity row. Test oracle for full_optimize.
OptimizationResult brute_force_optimize(double x, double y, int n_az = 2001,
                                        int n_tau = kTauSearchPoints);

}  // namespace bathprobe

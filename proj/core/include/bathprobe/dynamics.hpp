#pragma once

#include <array>

#include <Eigen/Core>

#include "bathprobe/bath.hpp"
#include "bathprobe/bloch.hpp"

namespace bathprobe {

/// Closed-form evolution of the probe under `bath` for dimensionless time
/// tau = gamma*t. tau = +infinity yields the thermal steady state exactly.
BlochVector evolve(const BlochVector& a0, const BathSpec& bath, double tau);

/// Steady state (0, 0, az_infinity) of `bath`.
BlochVector steady_state(const BathSpec& bath);

/// Fixed-step classical RK4 integration of the Bloch equations. Independent
/// check on `evolve`; requires finite tau and steps >= 10.
BlochVector ode_evolve(const BlochVector& a0, const BathSpec& bath, double tau, int steps);

// Generalized amplitude damping channel equivalent to `evolve` at fixed tau.
struct GadChannelParams {
  double eta = 1.0;        // survival factor exp(-gamma_q tau / gamma)
  double p_excited = 0.0;  // excited population of the fixed point
};

GadChannelParams gad_channel(const BathSpec& bath, double tau);

/// Action of the channel on a Bloch vector.
BlochVector apply_channel(const GadChannelParams& params, const BlochVector& a);

/// Kraus operators in the (excited, ground) basis. Two amplitude-damping
/// operators weighted by 1 - p_excited followed by two amplification
/// operators weighted by p_excited.
std::array<Eigen::Matrix2cd, 4> kraus_operators(const GadChannelParams& params);

}  // namespace bathprobe

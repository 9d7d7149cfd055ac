#include "bathprobe/dynamics.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "bathprobe/errors.hpp"

namespace bathprobe {

BlochVector::BlochVector(double ax, double ay, double az) : ax_(ax), ay_(ay), az_(az) {
  if (!std::isfinite(ax) || !std::isfinite(ay) || !std::isfinite(az)) {
    throw DomainError("BlochVector: components must be finite");
  }
  const double n2 = norm_squared();
  if (n2 > 1.0 + kPhysicalityTolerance) {
    throw DomainError("BlochVector: |a|^2 = " + std::to_string(n2) + " exceeds 1");
  }
  if (n2 > 1.0) {
    const double s = 1.0 / std::sqrt(n2);
    ax_ *= s;
    ay_ *= s;
    az_ *= s;
  }
}

BlochVector BlochVector::pure(double az) {
  if (!(az >= -1.0 && az <= 1.0)) {
    throw DomainError("BlochVector::pure: a_z must lie in [-1, 1]");
  }
  return {std::sqrt(std::max(0.0, 1.0 - az * az)), 0.0, az};
}

double distance(const BlochVector& a, const BlochVector& b) noexcept {
  const double dx = a.ax() - b.ax();
  const double dy = a.ay() - b.ay();
  const double dz = a.az() - b.az();
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

namespace {

void check_tau(double tau) {
  if (std::isnan(tau) || tau < 0.0) {
    throw DomainError("evolution time must be >= 0, got " + std::to_string(tau));
  }
}

}  // namespace

BlochVector steady_state(const BathSpec& bath) {
  return {0.0, 0.0, relaxation_params(bath).az_infinity};
}

BlochVector evolve(const BlochVector& a0, const BathSpec& bath, double tau) {
  check_tau(tau);
  if (std::isinf(tau)) return steady_state(bath);
  const RelaxationParams p = relaxation_params(bath);
  const double relaxed = -std::expm1(-p.gamma_q_over_gamma * tau);
  const double transverse = std::exp(-0.5 * p.gamma_q_over_gamma * tau);
  return {transverse * a0.ax(), transverse * a0.ay(), a0.az() + relaxed * (p.az_infinity - a0.az())};
}

BlochVector ode_evolve(const BlochVector& a0, const BathSpec& bath, double tau, int steps) {
  check_tau(tau);
  if (std::isinf(tau)) throw DomainError("ode_evolve: tau must be finite");
  if (steps < 10) throw DomainError("ode_evolve: steps must be >= 10");

  const RelaxationParams p = relaxation_params(bath);
  const double g = p.gamma_q_over_gamma;
  const double xi = p.xi_q_over_gamma;
  const double h = tau / steps;

  struct State {
    double x, y, z;
  };
  auto rhs = [&](const State& s) {
    return State{-0.5 * g * s.x, -0.5 * g * s.y, -g * s.z - xi};
  };
  auto axpy = [](const State& s, double c, const State& k) {
    return State{s.x + c * k.x, s.y + c * k.y, s.z + c * k.z};
  };

  State s{a0.ax(), a0.ay(), a0.az()};
  for (int i = 0; i < steps; ++i) {
    const State k1 = rhs(s);
    const State k2 = rhs(axpy(s, 0.5 * h, k1));
    const State k3 = rhs(axpy(s, 0.5 * h, k2));
    const State k4 = rhs(axpy(s, h, k3));
    s.x += h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
    s.y += h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
    s.z += h / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
  }
  return {s.x, s.y, s.z};
}

GadChannelParams gad_channel(const BathSpec& bath, double tau) {
  check_tau(tau);
  const RelaxationParams p = relaxation_params(bath);
  const double eta = std::isinf(tau) ? 0.0 : std::exp(-p.gamma_q_over_gamma * tau);
  return {eta, 0.5 * (1.0 + p.az_infinity)};
}

BlochVector apply_channel(const GadChannelParams& params, const BlochVector& a) {
  const double az_inf = 2.0 * params.p_excited - 1.0;
  const double s = std::sqrt(params.eta);
  return {s * a.ax(), s * a.ay(), params.eta * a.az() + (1.0 - params.eta) * az_inf};
}

std::array<Eigen::Matrix2cd, 4> kraus_operators(const GadChannelParams& params) {
  const double eta = params.eta;
  const double p = params.p_excited;
  const double s = std::sqrt(eta);
  const double d = std::sqrt(1.0 - eta);
  const double wd = std::sqrt(1.0 - p);
  const double wu = std::sqrt(p);

  // Index 0 = excited, index 1 = ground.
  std::array<Eigen::Matrix2cd, 4> k;
  k[0] << wd * s, 0.0, 0.0, wd;  // no-jump, damping branch
  k[1] << 0.0, 0.0, wd * d, 0.0;  // excited -> ground
  k[2] << wu, 0.0, 0.0, wu * s;  // no-jump, amplification branch
  k[3] << 0.0, wu * d, 0.0, 0.0;  // ground -> excited
  return k;
}

}  // namespace bathprobe

#pragma once

#include <string_view>

namespace bathprobe {

enum class BathStatistics { Bosonic, Fermionic };

/// +1 for bosons, -1 for fermions.
constexpr int statistics_sign(BathStatistics s) noexcept {
  return s == BathStatistics::Bosonic ? +1 : -1;
}

std::string_view to_string(BathStatistics s) noexcept;

/// A thermal bath hypothesis: particle statistics plus the dimensionless
/// product beta*omega. Bosonic baths require beta*omega > 0.
class BathSpec {
 public:
  BathSpec(BathStatistics statistics, double beta_omega);

  static BathSpec bosonic(double beta_omega) { return {BathStatistics::Bosonic, beta_omega}; }
  static BathSpec fermionic(double beta_omega) { return {BathStatistics::Fermionic, beta_omega}; }

  BathStatistics statistics() const noexcept { return statistics_; }
  double beta_omega() const noexcept { return beta_omega_; }
  int sign() const noexcept { return statistics_sign(statistics_); }

  friend bool operator==(const BathSpec&, const BathSpec&) = default;

 private:
  BathStatistics statistics_;
  double beta_omega_;
};

// Rates in units of the bare dissipation rate gamma. All times in this library
// are the dimensionless tau = gamma * t.
struct RelaxationParams {
  double gamma_q_over_gamma = 1.0;
  double xi_q_over_gamma = 0.0;
  double az_infinity = 0.0;
};

/// Mean occupation 1 / (exp(beta*omega) - s_q): Bose-Einstein or Fermi-Dirac.
double occupation(const BathSpec& bath);

/// Longitudinal rate, drive and steady-state z component of the probe.
RelaxationParams relaxation_params(const BathSpec& bath);

}  // namespace bathprobe

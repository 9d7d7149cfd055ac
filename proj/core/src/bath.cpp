#include "bathprobe/bath.hpp"

#include <cmath>
#include <string>

#include "bathprobe/errors.hpp"

namespace bathprobe {

std::string_view to_string(BathStatistics s) noexcept {
  return s == BathStatistics::Bosonic ? "bosonic" : "fermionic";
}

BathSpec::BathSpec(BathStatistics statistics, double beta_omega)
    : statistics_(statistics), beta_omega_(beta_omega) {
  if (!std::isfinite(beta_omega)) {
    throw DomainError("BathSpec: beta*omega must be finite");
  }
  if (statistics == BathStatistics::Bosonic && !(beta_omega > 0.0)) {
    throw DomainError("BathSpec: bosonic bath requires beta*omega > 0, got " +
                      std::to_string(beta_omega));
  }
  if (statistics == BathStatistics::Fermionic && beta_omega < 0.0) {
    throw DomainError("BathSpec: fermionic bath requires beta*omega >= 0, got " +
                      std::to_string(beta_omega));
  }
}

double occupation(const BathSpec& bath) {
  const double b = bath.beta_omega();
  if (bath.statistics() == BathStatistics::Bosonic) {
    return 1.0 / std::expm1(b);
  }
  return 1.0 / (std::exp(b) + 1.0);
}

RelaxationParams relaxation_params(const BathSpec& bath) {
  const double t = std::tanh(0.5 * bath.beta_omega());
  if (bath.statistics() == BathStatistics::Fermionic) {
    return {1.0, t, -t};
  }
  // gamma_b = gamma * coth(beta*omega/2), xi_b = gamma.
  return {1.0 / t, 1.0, -t};
}

}  // namespace bathprobe

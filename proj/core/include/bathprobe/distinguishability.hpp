#pragma once

#include "bathprobe/bath.hpp"
#include "bathprobe/bloch.hpp"
#include "bathprobe/density_matrix.hpp"

namespace bathprobe {

/// The two competing hypotheses: a fermionic bath at beta_f and a bosonic bath
/// at beta_b, together with x = tanh(beta_f omega / 2), y = tanh(beta_b omega / 2).
class DiscriminationPair {
 public:
  DiscriminationPair(BathSpec fermionic, BathSpec bosonic);

  static DiscriminationPair from_betas(double beta_f_omega, double beta_b_omega);
  /// Requires 0 <= x < 1 and 0 < y < 1.
  static DiscriminationPair from_xy(double x, double y);

  const BathSpec& fermionic() const noexcept { return fermionic_; }
  const BathSpec& bosonic() const noexcept { return bosonic_; }
  const BathSpec& bath(BathStatistics s) const noexcept {
    return s == BathStatistics::Bosonic ? bosonic_ : fermionic_;
  }
  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

 private:
  BathSpec fermionic_;
  BathSpec bosonic_;
  double x_;
  double y_;
};

/// Trace norm of the difference of the two states, i.e. |a1 - a2|.
double bloch_trace_distance(const BlochVector& a1, const BlochVector& a2) noexcept;

/// Single-copy Helstrom error probability 1/2 - |a_b(tau) - a_f(tau)| / 4.
double helstrom(const BlochVector& a0, const DiscriminationPair& pair, double tau);

/// Trace distance reached from the excited input, as a function of tau, x, y.
double excited_distance(double tau, double x, double y);

struct ChernoffResult {
  double q_value = 1.0;
  double r_star = 0.0;
};

/// min over r in [0,1] of Tr[rho_b^r rho_f^(1-r)]; eigenvalues below 1e-14
/// are treated as outside the support (0^r = 0, including r = 0).
ChernoffResult chernoff(const DensityMatrix2& rho_b, const DensityMatrix2& rho_f);

/// Tr[rho_b^r rho_f^(1-r)] at a single r.
double chernoff_objective(const DensityMatrix2& rho_b, const DensityMatrix2& rho_f, double r);

inline constexpr int kMaxCopies = 8;

/// Helstrom error probability for n_copies identical copies, from the dense
/// 2^n x 2^n tensor powers of the evolved states.
double multi_copy_helstrom(const DiscriminationPair& pair, const BlochVector& a0, double tau,
                           int n_copies);

}  // namespace bathprobe

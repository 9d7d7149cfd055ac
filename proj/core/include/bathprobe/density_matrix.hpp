#pragma once

#include <array>

#include <Eigen/Core>

#include "bathprobe/bloch.hpp"

namespace bathprobe {

/// Validated 2x2 density matrix in the (excited, ground) basis, so that
/// rho = (1 + a . sigma) / 2 with the standard Pauli matrices.
class DensityMatrix2 {
 public:
  static constexpr double kHermitianTolerance = 1e-14;
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kEigenTolerance = 1e-12;

  explicit DensityMatrix2(const Eigen::Matrix2cd& m);
  static DensityMatrix2 from_bloch(const BlochVector& a);
  /// diag(p_excited, 1 - p_excited).
  static DensityMatrix2 diagonal(double p_excited, double p_ground);

  const Eigen::Matrix2cd& matrix() const noexcept { return m_; }
  BlochVector bloch() const;

 private:
  Eigen::Matrix2cd m_;
};

// Eigen-decomposition of a 2x2 Hermitian matrix, eigenvalues ascending and
// eigenvectors stored as matrix columns.
struct Spectrum2 {
  std::array<double, 2> values{};
  Eigen::Matrix2cd vectors = Eigen::Matrix2cd::Identity();
};

/// Closed-form spectral decomposition; does not go through Eigen's solvers.
Spectrum2 hermitian_spectrum(const Eigen::Matrix2cd& m);

}  // namespace bathprobe

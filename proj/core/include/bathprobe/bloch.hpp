#pragma once

#include <cmath>

namespace bathprobe {

/// Bloch vector of a qubit state, rho = (1 + a . sigma) / 2, with a_z = +1 the
/// excited state and a_z = -1 the ground state.
///
/// Construction enforces |a|^2 <= 1 + kPhysicalityTolerance; vectors that
/// overshoot the unit sphere by less than the tolerance are rescaled onto it.
class BlochVector {
 public:
  static constexpr double kPhysicalityTolerance = 1e-12;

  BlochVector() = default;
  BlochVector(double ax, double ay, double az);

  static BlochVector excited() { return {0.0, 0.0, 1.0}; }
  static BlochVector ground() { return {0.0, 0.0, -1.0}; }
  /// Pure state in the x-z plane with the given z component.
  static BlochVector pure(double az);

  double ax() const noexcept { return ax_; }
  double ay() const noexcept { return ay_; }
  double az() const noexcept { return az_; }

  double norm_squared() const noexcept { return ax_ * ax_ + ay_ * ay_ + az_ * az_; }
  double norm() const noexcept { return std::sqrt(norm_squared()); }
  double transverse_norm() const noexcept { return std::hypot(ax_, ay_); }

  friend bool operator==(const BlochVector&, const BlochVector&) = default;

 private:
  double ax_ = 0.0;
  double ay_ = 0.0;
  double az_ = 0.0;
};

/// Euclidean distance between two Bloch vectors.
double distance(const BlochVector& a, const BlochVector& b) noexcept;

}  // namespace bathprobe

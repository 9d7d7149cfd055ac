#include "bathprobe/density_matrix.hpp"

#include <cmath>
#include <complex>

#include "bathprobe/errors.hpp"

namespace bathprobe {

using cd = std::complex<double>;

DensityMatrix2::DensityMatrix2(const Eigen::Matrix2cd& m) : m_(m) {
  if (!m.allFinite()) throw DomainError("DensityMatrix2: non-finite entries");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
    throw DomainError("DensityMatrix2: matrix is not Hermitian");
  }
  if (std::abs(m.trace() - cd(1.0, 0.0)) > kTraceTolerance) {
    throw DomainError("DensityMatrix2: trace differs from 1");
  }
  const Spectrum2 s = hermitian_spectrum(m);
  if (s.values[0] < -kEigenTolerance || s.values[1] > 1.0 + kEigenTolerance) {
    throw DomainError("DensityMatrix2: eigenvalues outside [0, 1]");
  }
}

DensityMatrix2 DensityMatrix2::from_bloch(const BlochVector& a) {
  Eigen::Matrix2cd m;
  m << cd(0.5 * (1.0 + a.az()), 0.0), cd(0.5 * a.ax(), -0.5 * a.ay()),
      cd(0.5 * a.ax(), 0.5 * a.ay()), cd(0.5 * (1.0 - a.az()), 0.0);
  return DensityMatrix2(m);
}

DensityMatrix2 DensityMatrix2::diagonal(double p_excited, double p_ground) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = p_excited;
  m(1, 1) = p_ground;
  return DensityMatrix2(m);
}

BlochVector DensityMatrix2::bloch() const {
  return {2.0 * m_(1, 0).real(), 2.0 * m_(1, 0).imag(), (m_(0, 0) - m_(1, 1)).real()};
}

Spectrum2 hermitian_spectrum(const Eigen::Matrix2cd& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const cd b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  const double mean = 0.5 * (a + d);
  const double half_gap = std::hypot(0.5 * (a - d), std::abs(b));

  Spectrum2 s;
  s.values = {mean - half_gap, mean + half_gap};
  if (half_gap == 0.0) return s;

  // For each eigenvalue pick the better conditioned of the two candidate
  // null vectors of (m - lambda).
  for (int k = 0; k < 2; ++k) {
    const double lambda = s.values[k];
    Eigen::Vector2cd u(b, cd(lambda - a, 0.0));
    Eigen::Vector2cd v(cd(lambda - d, 0.0), std::conj(b));
    Eigen::Vector2cd w = u.squaredNorm() >= v.squaredNorm() ? u : v;
    s.vectors.col(k) = w / w.norm();
  }
  return s;
}

}  // namespace bathprobe

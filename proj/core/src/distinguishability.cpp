#include "bathprobe/distinguishability.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "bathprobe/dynamics.hpp"
#include "bathprobe/errors.hpp"
#include "bathprobe/numerics.hpp"

namespace bathprobe {

DiscriminationPair::DiscriminationPair(BathSpec fermionic, BathSpec bosonic)
    : fermionic_(fermionic),
      bosonic_(bosonic),
      x_(std::tanh(0.5 * fermionic.beta_omega())),
      y_(std::tanh(0.5 * bosonic.beta_omega())) {
  if (fermionic.statistics() != BathStatistics::Fermionic ||
      bosonic.statistics() != BathStatistics::Bosonic) {
    throw DomainError("DiscriminationPair: expected one fermionic and one bosonic bath");
  }
  if (!(x_ < 1.0) || !(y_ < 1.0)) {
    throw DomainError("DiscriminationPair: beta*omega too large, tanh(beta*omega/2) rounds to 1");
  }
}

DiscriminationPair DiscriminationPair::from_betas(double beta_f_omega, double beta_b_omega) {
  return {BathSpec::fermionic(beta_f_omega), BathSpec::bosonic(beta_b_omega)};
}

DiscriminationPair DiscriminationPair::from_xy(double x, double y) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("DiscriminationPair: x must lie in [0, 1)");
  if (!(y > 0.0 && y < 1.0)) throw DomainError("DiscriminationPair: y must lie in (0, 1)");
  return from_betas(2.0 * std::atanh(x), 2.0 * std::atanh(y));
}

double bloch_trace_distance(const BlochVector& a1, const BlochVector& a2) noexcept {
  return distance(a1, a2);
}

double helstrom(const BlochVector& a0, const DiscriminationPair& pair, double tau) {
  const BlochVector ab = evolve(a0, pair.bosonic(), tau);
  const BlochVector af = evolve(a0, pair.fermionic(), tau);
  return 0.5 - 0.25 * bloch_trace_distance(ab, af);
}

double excited_distance(double tau, double x, double y) {
  if (std::isnan(tau) || tau < 0.0) throw DomainError("excited_distance: tau must be >= 0");
  if (!(x >= 0.0 && x < 1.0) || !(y > 0.0 && y < 1.0)) {
    throw DomainError("excited_distance: need 0 <= x < 1 and 0 < y < 1");
  }
  if (std::isinf(tau)) return std::abs(x - y);
  const double fermionic_part = -std::expm1(-tau) * (1.0 + x);
  const double bosonic_part = -std::expm1(-tau / y) * (1.0 + y);
  return std::abs(fermionic_part - bosonic_part);
}

namespace {

constexpr double kSupportCutoff = 1e-14;

double support_power(double lambda, double r) {
  return lambda <= kSupportCutoff ? 0.0 : std::pow(lambda, r);
}

struct ChernoffTerms {
  Spectrum2 b;
  Spectrum2 f;
  double overlap[2][2];  // |<b_i|f_j>|^2
};

ChernoffTerms chernoff_terms(const DensityMatrix2& rho_b, const DensityMatrix2& rho_f) {
  ChernoffTerms t{hermitian_spectrum(rho_b.matrix()), hermitian_spectrum(rho_f.matrix()), {}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      t.overlap[i][j] = std::norm(t.b.vectors.col(i).dot(t.f.vectors.col(j)));
    }
  }
  return t;
}

double evaluate(const ChernoffTerms& t, double r) {
  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double bi = support_power(t.b.values[i], r);
    if (bi == 0.0) continue;
    for (int j = 0; j < 2; ++j) {
      sum += bi * support_power(t.f.values[j], 1.0 - r) * t.overlap[i][j];
    }
  }
  return sum;
}

}  // namespace

double chernoff_objective(const DensityMatrix2& rho_b, const DensityMatrix2& rho_f, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("chernoff_objective: r must lie in [0, 1]");
  return evaluate(chernoff_terms(rho_b, rho_f), r);
}

ChernoffResult chernoff(const DensityMatrix2& rho_b, const DensityMatrix2& rho_f) {
  const ChernoffTerms terms = chernoff_terms(rho_b, rho_f);
  static const std::vector<double> grid = numerics::linspace(0.0, 1.0, 1001);
  const numerics::Extremum best = numerics::scan_and_refine_maximum(
      [&](double r) { return -evaluate(terms, r); }, grid, 1e-10);
  return {std::clamp(-best.value, 0.0, 1.0), best.arg};
}

namespace {

Eigen::MatrixXcd tensor_power(const Eigen::Matrix2cd& m, int n) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
  for (int k = 0; k < n; ++k) {
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        next.block<2, 2>(2 * i, 2 * j) = out(i, j) * m;
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

double multi_copy_helstrom(const DiscriminationPair& pair, const BlochVector& a0, double tau,
                           int n_copies) {
  if (n_copies < 1 || n_copies > kMaxCopies) {
    throw DomainError("multi_copy_helstrom: n_copies must lie in [1, " +
                      std::to_string(kMaxCopies) + "]");
  }
  const auto rho_b = DensityMatrix2::from_bloch(evolve(a0, pair.bosonic(), tau));
  const auto rho_f = DensityMatrix2::from_bloch(evolve(a0, pair.fermionic(), tau));
  const Eigen::MatrixXcd diff =
      tensor_power(rho_b.matrix(), n_copies) - tensor_power(rho_f.matrix(), n_copies);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw DomainError("multi_copy_helstrom: eigen-decomposition failed");
  }
  const double trace_norm = solver.eigenvalues().cwiseAbs().sum();
  return 0.5 - 0.25 * trace_norm;
}

}  // namespace bathprobe

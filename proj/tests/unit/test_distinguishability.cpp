#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "bathprobe/distinguishability.hpp"
#include "bathprobe/dynamics.hpp"
#include "bathprobe/errors.hpp"
#include "support.hpp"

using namespace bathprobe;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Reference values from tests/oracles/generate_oracles.py.
constexpr double kChernoffRStar = 0.45843115784609789332;
constexpr double kChernoffQ = 0.89370686743341969793;
constexpr double kTwoCopyHelstrom = 0.43392982121074013287;

DiscriminationPair random_pair(testing::Sampler& s) {
  return DiscriminationPair::from_betas(s.uniform(0.0, 5.0), s.uniform(0.05, 5.0));
}

}  // namespace

TEST_SUITE("DiscriminationPair") {
  TEST_CASE("x and y follow the inverse temperatures") {
    const auto p = DiscriminationPair::from_betas(1.0, 2.0);
    CHECK(p.x() == doctest::Approx(std::tanh(0.5)).epsilon(1e-14));
    CHECK(p.y() == doctest::Approx(std::tanh(1.0)).epsilon(1e-14));
    const auto q = DiscriminationPair::from_xy(0.68, 0.41);
    CHECK(q.x() == doctest::Approx(0.68).epsilon(1e-14));
    CHECK(q.y() == doctest::Approx(0.41).epsilon(1e-14));
    CHECK(std::tanh(q.fermionic().beta_omega() / 2) == doctest::Approx(0.68).epsilon(1e-14));
  }

  TEST_CASE("statistics must match the slot") {
    CHECK_THROWS_AS(DiscriminationPair(BathSpec::bosonic(1.0), BathSpec::bosonic(1.0)), DomainError);
    CHECK_THROWS_AS(DiscriminationPair(BathSpec::fermionic(1.0), BathSpec::fermionic(1.0)), DomainError);
    CHECK_THROWS_AS(DiscriminationPair::from_xy(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(DiscriminationPair::from_xy(0.5, 1.0), DomainError);
    CHECK_THROWS_AS(DiscriminationPair::from_xy(1.0, 0.5), DomainError);
  }
}

TEST_SUITE("bloch_trace_distance") {
  TEST_CASE("examples") {
    const BlochVector a{0.1, 0.2, 0.3};
    CHECK(bloch_trace_distance(a, a) == 0.0);
    CHECK(bloch_trace_distance(BlochVector::excited(), BlochVector::ground()) == 2.0);
    CHECK(bloch_trace_distance({1, 0, 0}, {0, 1, 0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  }

  TEST_CASE("equals the trace norm of the density matrix difference") {
    testing::Sampler s(23);
    for (int i = 0; i < 100; ++i) {
      const BlochVector a = s.bloch_vector();
      const BlochVector b = s.bloch_vector();
      const Eigen::Matrix2cd diff =
          DensityMatrix2::from_bloch(a).matrix() - DensityMatrix2::from_bloch(b).matrix();
      const auto ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(diff).eigenvalues();
      const double trace_norm = std::abs(ev(0)) + std::abs(ev(1));
      CHECK(bloch_trace_distance(a, b) == doctest::Approx(trace_norm).epsilon(1e-12));
    }
  }
}

TEST_SUITE("helstrom") {
  TEST_CASE("indistinguishable at tau = 0") {
    testing::Sampler s(29);
    for (int i = 0; i < 20; ++i) CHECK(helstrom(s.bloch_vector(), random_pair(s), 0.0) == 0.5);
  }

  TEST_CASE("equal temperatures share a steady state") {
    const auto p = DiscriminationPair::from_betas(1.3, 1.3);
    CHECK(helstrom(BlochVector::excited(), p, kInf) == doctest::Approx(0.5).epsilon(1e-15));
  }

  TEST_CASE("excited input reaches the worst case near tau = 1.8") {
    const auto p = DiscriminationPair::from_xy(0.68, 0.41);
    CHECK(std::abs(helstrom(BlochVector::excited(), p, 1.8) - 0.5) <= 0.005);
  }

  TEST_CASE("excited input matches the closed-form distance") {
    testing::Sampler s(31);
    for (int i = 0; i < 100; ++i) {
      const auto p = random_pair(s);
      const double tau = s.uniform(0.0, 10.0);
      CHECK(helstrom(BlochVector::excited(), p, tau) ==
            doctest::Approx(0.5 - excited_distance(tau, p.x(), p.y()) / 4).epsilon(1e-13));
    }
  }

  TEST_CASE("range, pure-input dominance and azimuthal symmetry") {
    testing::Sampler s(37);
    for (int i = 0; i < 300; ++i) {
      const auto p = random_pair(s);
      const double tau = s.uniform(0.0, 10.0);
      const BlochVector a = s.bloch_vector();
      const double h = helstrom(a, p, tau);
      CHECK(h >= 0.0);
      CHECK(h <= 0.5);

      const double r = a.transverse_norm();
      const double phi = s.uniform(0.0, 2 * std::numbers::pi);
      const BlochVector rotated{r * std::cos(phi), r * std::sin(phi), a.az()};
      CHECK(helstrom(rotated, p, tau) == doctest::Approx(h).epsilon(1e-13));

      CHECK(helstrom(BlochVector::pure(a.az()), p, tau) <= h + 1e-15);
    }
  }

  TEST_CASE("susceptible at every finite time for non-polar inputs") {
    testing::Sampler s(41);
    for (int i = 0; i < 40; ++i) {
      const auto p = DiscriminationPair::from_xy(s.uniform(0.0, 0.95), s.uniform(0.05, 0.95));
      const BlochVector a = BlochVector::pure(s.uniform(-0.9, 0.9));
      for (double tau = 0.01; tau <= 20.0; tau += 0.01) {
        CHECK_MESSAGE(helstrom(a, p, tau) < 0.5, "tau=", tau);
      }
    }
  }
}

TEST_SUITE("excited_distance") {
  TEST_CASE("examples") {
    CHECK(excited_distance(0.0, 0.3, 0.7) == 0.0);
    CHECK(excited_distance(kInf, 0.3, 0.7) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(excited_distance(1.76, 0.68, 0.41) < 0.01);
  }
}

TEST_SUITE("chernoff") {
  TEST_CASE("identical states") {
    const auto rho = DensityMatrix2::from_bloch({0.2, 0.1, -0.3});
    CHECK(chernoff(rho, rho).q_value == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("orthogonal supports") {
    const auto r = chernoff(DensityMatrix2::from_bloch(BlochVector::excited()),
                            DensityMatrix2::from_bloch(BlochVector::ground()));
    CHECK(r.q_value == 0.0);
  }

  TEST_CASE("diagonal example against frozen value and a dense r grid") {
    const auto a = DensityMatrix2::diagonal(0.9, 0.1);
    const auto b = DensityMatrix2::diagonal(0.5, 0.5);
    const auto r = chernoff(a, b);
    CHECK(r.q_value == doctest::Approx(kChernoffQ).epsilon(1e-12));
    CHECK(r.r_star == doctest::Approx(kChernoffRStar).epsilon(1e-7));

    double best = 1.0;
    for (int k = 0; k <= 10000; ++k) {
      const double t = k * 1e-4;
      best = std::min(best, std::pow(0.9, t) * std::pow(0.5, 1 - t) +
                                std::pow(0.1, t) * std::pow(0.5, 1 - t));
    }
    CHECK(r.q_value <= best + 1e-15);
    CHECK(r.q_value >= best - 1e-8);
  }

  TEST_CASE("swap symmetry and consistency with the objective") {
    testing::Sampler s(43);
    for (int i = 0; i < 50; ++i) {
      const auto a = DensityMatrix2::from_bloch(s.bloch_vector());
      const auto b = DensityMatrix2::from_bloch(s.bloch_vector());
      const auto ab = chernoff(a, b);
      const auto ba = chernoff(b, a);
      CHECK(ab.q_value >= 0.0);
      CHECK(ab.q_value <= 1.0 + 1e-12);
      CHECK(ab.q_value == doctest::Approx(ba.q_value).epsilon(1e-10));
      CHECK(ab.q_value == doctest::Approx(chernoff_objective(a, b, ab.r_star)).epsilon(1e-14));
      if (ab.q_value < 1.0 - 1e-6) CHECK(ab.r_star == doctest::Approx(1.0 - ba.r_star).epsilon(1e-4));
    }
  }

  TEST_CASE("rank-deficient states follow the support convention") {
    const auto pure = DensityMatrix2::from_bloch(BlochVector::excited());
    const auto mixed = DensityMatrix2::diagonal(0.5, 0.5);
    // Tr[P_excited rho^(1-r)] = 0.5^(1-r), minimized at r = 0 by the projector rule.
    CHECK(chernoff_objective(pure, mixed, 0.0) == doctest::Approx(0.5));
    CHECK(chernoff(pure, mixed).q_value == doctest::Approx(0.5).epsilon(1e-9));
  }
}

TEST_SUITE("multi_copy_helstrom") {
  TEST_CASE("one copy equals the single-copy error") {
    testing::Sampler s(47);
    for (int i = 0; i < 20; ++i) {
      const auto p = random_pair(s);
      const BlochVector a = s.bloch_vector();
      const double tau = s.uniform(0.0, 5.0);
      CHECK(multi_copy_helstrom(p, a, tau, 1) == doctest::Approx(helstrom(a, p, tau)).epsilon(1e-13));
    }
  }

  TEST_CASE("identical steady states stay indistinguishable") {
    const auto p = DiscriminationPair::from_betas(0.8, 0.8);
    for (int n = 1; n <= kMaxCopies; ++n) {
      CHECK(multi_copy_helstrom(p, BlochVector::excited(), kInf, n) == doctest::Approx(0.5).epsilon(1e-12));
    }
  }

  TEST_CASE("two copies of the excited input") {
    const auto p = DiscriminationPair::from_xy(0.68, 0.41);
    CHECK(multi_copy_helstrom(p, BlochVector::excited(), 1.0, 2) ==
          doctest::Approx(kTwoCopyHelstrom).epsilon(1e-12));

    // Excited input stays diagonal, so the tensor square is diagonal as well.
    const double pb = 0.5 * (1 + evolve(BlochVector::excited(), p.bosonic(), 1.0).az());
    const double pf = 0.5 * (1 + evolve(BlochVector::excited(), p.fermionic(), 1.0).az());
    const double qb[2] = {pb, 1 - pb};
    const double qf[2] = {pf, 1 - pf};
    double l1 = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) l1 += std::abs(qb[i] * qb[j] - qf[i] * qf[j]);
    CHECK(multi_copy_helstrom(p, BlochVector::excited(), 1.0, 2) ==
          doctest::Approx(0.5 - l1 / 4).epsilon(1e-13));
  }

  TEST_CASE("more copies never hurt and the Chernoff bound holds") {
    testing::Sampler s(53);
    for (int i = 0; i < 50; ++i) {
      const auto p = random_pair(s);
      const BlochVector a = s.bloch_vector();
      const double tau = s.uniform(0.01, 5.0);
      const double q = chernoff(DensityMatrix2::from_bloch(evolve(a, p.bosonic(), tau)),
                                DensityMatrix2::from_bloch(evolve(a, p.fermionic(), tau)))
                           .q_value;
      double prev = 0.5;
      for (int n = 1; n <= 3; ++n) {
        const double h = multi_copy_helstrom(p, a, tau, n);
        CHECK(h <= 0.5 * std::pow(q, n) + 1e-12);
        CHECK(h <= prev + 1e-12);
        prev = h;
      }
    }
  }

  TEST_CASE("copy count is bounded") {
    const auto p = DiscriminationPair::from_xy(0.5, 0.5);
    CHECK_THROWS_AS(multi_copy_helstrom(p, BlochVector::excited(), 1.0, kMaxCopies + 1), DomainError);
    CHECK_THROWS_AS(multi_copy_helstrom(p, BlochVector::excited(), 1.0, 0), DomainError);
  }
}

TEST_SUITE("DensityMatrix2") {
  TEST_CASE("closed-form spectrum matches Eigen") {
    testing::Sampler s(59);
    for (int i = 0; i < 100; ++i) {
      const Eigen::Matrix2cd m = DensityMatrix2::from_bloch(s.bloch_vector()).matrix();
      const Spectrum2 sp = hermitian_spectrum(m);
      const auto ref = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(m).eigenvalues();
      CHECK(sp.values[0] == doctest::Approx(ref(0)).epsilon(1e-13));
      CHECK(sp.values[1] == doctest::Approx(ref(1)).epsilon(1e-13));
      Eigen::Matrix2cd rebuilt = sp.vectors * Eigen::Vector2cd(sp.values[0], sp.values[1]).asDiagonal() *
                                 sp.vectors.adjoint();
      CHECK((rebuilt - m).cwiseAbs().maxCoeff() < 1e-14);
    }
  }

  TEST_CASE("Bloch round trip") {
    testing::Sampler s(61);
    for (int i = 0; i < 50; ++i) {
      const BlochVector a = s.bloch_vector();
      CHECK(distance(DensityMatrix2::from_bloch(a).bloch(), a) < 1e-15);
    }
  }

  TEST_CASE("invalid matrices are rejected") {
    Eigen::Matrix2cd m;
    m << 0.6, std::complex<double>(0.1, 0.1), std::complex<double>(0.2, 0.0), 0.4;
    CHECK_THROWS_AS(DensityMatrix2{m}, DomainError);
    m << 0.7, 0.0, 0.0, 0.4;
    CHECK_THROWS_AS(DensityMatrix2{m}, DomainError);
    m << 1.2, 0.0, 0.0, -0.2;
    CHECK_THROWS_AS(DensityMatrix2{m}, DomainError);
  }
}

#include <doctest.h>

#include <cmath>
#include <limits>

#include "bathprobe/bayesian.hpp"
#include "bathprobe/dynamics.hpp"
#include "bathprobe/errors.hpp"
#include "bathprobe/numerics.hpp"
#include "bathprobe/optimal_probing.hpp"
#include "bathprobe/rng.hpp"
#include "support.hpp"

using namespace bathprobe;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kTestSeed = 20240611;

// Reference values from tests/oracles/generate_oracles.py.
constexpr double kPosterior37 = 0.69483648250885917522;
constexpr double kDelta = 0.0001771644151363269707;
constexpr double kRescaled = 0.461810783032426384;
constexpr double kP1Bosonic = 0.35291818840959062083;

// Exact probability that the decision rule misidentifies `truth` with n shots.
double exact_error(const OutcomeModel& mb, const OutcomeModel& mf, BathStatistics truth, int n) {
  const OutcomeModel& m = truth == BathStatistics::Bosonic ? mb : mf;
  double err = 0.0;
  for (int n1 = 0; n1 <= n; ++n1) {
    const int n0 = n - n1;
    const double lp = std::lgamma(n + 1.0) - std::lgamma(n0 + 1.0) - std::lgamma(n1 + 1.0) +
                      (n0 ? n0 * std::log(m.p0) : 0.0) + (n1 ? n1 * std::log(m.p1) : 0.0);
    const Counts c{static_cast<double>(n0), static_cast<double>(n1)};
    if (decide(posteriors(c, mb, mf)) != truth) err += std::exp(lp);
  }
  return err;
}

}  // namespace

TEST_SUITE("outcome_probabilities") {
  TEST_CASE("excited input is certain at tau = 0") {
    const auto m = outcome_probabilities(BathSpec::bosonic(0.3), BlochVector::excited(), 0.0);
    CHECK(m.p0 == 0.0);
    CHECK(m.p1 == 1.0);
  }

  TEST_CASE("steady-state excitation equals the Fermi occupation") {
    const auto m = outcome_probabilities(BathSpec::fermionic(1.0), BlochVector::excited(), kInf);
    CHECK(m.p1 == doctest::Approx((1 - std::tanh(0.5)) / 2).epsilon(1e-15));
    CHECK(m.p1 == doctest::Approx(occupation(BathSpec::fermionic(1.0))).epsilon(1e-15));
  }

  TEST_CASE("bosonic beta omega = 1, tau = 1 against RK4") {
    const auto m = outcome_probabilities(BathSpec::bosonic(1.0), BlochVector::excited(), 1.0);
    CHECK(m.p1 == doctest::Approx(kP1Bosonic).epsilon(1e-13));
    const double rk4 = 0.5 * (1 + ode_evolve(BlochVector::excited(), BathSpec::bosonic(1.0), 1.0, 10000).az());
    CHECK(m.p1 == doctest::Approx(rk4).epsilon(1e-12));
  }

  TEST_CASE("normalized") {
    testing::Sampler s(89);
    for (int i = 0; i < 100; ++i) {
      const auto m = outcome_probabilities(s.bath(), s.bloch_vector(), s.uniform(0, 10));
      CHECK(m.p0 + m.p1 == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(m.p0 >= 0.0);
      CHECK(m.p1 >= 0.0);
    }
  }
}

TEST_SUITE("posteriors") {
  TEST_CASE("identical models are uninformative") {
    const OutcomeModel m{0.3, 0.7};
    const auto p = posteriors({4, 6}, m, m);
    CHECK(p.bosonic == 0.5);
    CHECK(p.fermionic == 0.5);
    CHECK(decide(p) == BathStatistics::Fermionic);
  }

  TEST_CASE("impossible data rules out a hypothesis") {
    const auto p = posteriors({0, 10}, {0.5, 0.5}, {1.0, 0.0});
    CHECK(p.fermionic == 0.0);
    CHECK(p.bosonic == 1.0);
  }

  TEST_CASE("3 zeros and 7 ones") {
    const auto p = posteriors({3, 7}, {0.3, 0.7}, {0.5, 0.5});
    const double direct = std::pow(0.3, 3) * std::pow(0.7, 7) /
                          (std::pow(0.3, 3) * std::pow(0.7, 7) + std::pow(0.5, 10));
    CHECK(p.bosonic == doctest::Approx(kPosterior37).epsilon(1e-14));
    CHECK(p.bosonic == doctest::Approx(direct).epsilon(1e-14));
    CHECK(decide(p) == BathStatistics::Bosonic);
  }

  TEST_CASE("zero probability with zero count contributes nothing") {
    CHECK(log_likelihood({0, 5}, {0.0, 1.0}) == 0.0);
    CHECK(log_likelihood({1, 5}, {0.0, 1.0}) == -kInf);
  }

  TEST_CASE("data impossible under both hypotheses is undecidable") {
    CHECK_THROWS_AS(posteriors({1, 1}, {1.0, 0.0}, {0.0, 1.0}), DomainError);
  }

  TEST_CASE("normalization and the prior") {
    testing::Sampler s(97);
    for (int i = 0; i < 200; ++i) {
      const double pb = s.uniform(0, 1), pf = s.uniform(0, 1);
      const Counts c{s.uniform(0, 500), s.uniform(0, 500)};
      const double prior = s.uniform(0, 1);
      const auto p = posteriors(c, {1 - pb, pb}, {1 - pf, pf}, prior);
      CHECK(p.bosonic + p.fermionic == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(p.bosonic >= 0.0);
      CHECK(p.fermionic >= 0.0);
    }
    CHECK(posteriors({2, 2}, {0.2, 0.8}, {0.8, 0.2}, 0.9).bosonic == doctest::Approx(0.9));
  }
}

TEST_SUITE("ideal_delta") {
  TEST_CASE("identical models at tau = 0") {
    const auto p = DiscriminationPair::from_betas(0.7, 0.7);
    const auto d = ideal_delta(p, BlochVector::excited(), 0.0, 100);
    CHECK(d.delta == 0.5);
    CHECK(d.rescaled == 0.5);
  }

  TEST_CASE("one half where the outcome models cross") {
    const auto p = DiscriminationPair::from_betas(1.0, 0.5);
    const double t1 = *characteristic_times(p.x(), p.y()).t1;
    CHECK(ideal_delta(p, BlochVector::excited(), t1, 100).delta == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(ideal_delta(p, BlochVector::excited(), 0.5 * t1, 100).delta < 0.5);
    CHECK(ideal_delta(p, BlochVector::excited(), 2.0 * t1, 100).delta < 0.5);
  }

  TEST_CASE("beta_b = 2, beta_f = 1, tau = 2, N = 100") {
    const auto p = DiscriminationPair::from_betas(1.0, 2.0);
    const auto d = ideal_delta(p, BlochVector::excited(), 2.0, 100);
    CHECK(d.delta == doctest::Approx(kDelta).epsilon(1e-10));
    CHECK(d.rescaled == doctest::Approx(kRescaled).epsilon(1e-12));
  }

  TEST_CASE("bounded by one half") {
    testing::Sampler s(101);
    for (int i = 0; i < 200; ++i) {
      const auto p = DiscriminationPair::from_betas(s.uniform(0, 5), s.uniform(0.05, 5));
      const auto d = ideal_delta(p, s.bloch_vector(), s.uniform(0, 10), s.uniform(1, 1000));
      CHECK(d.delta >= 0.0);
      CHECK(d.delta <= 0.5);
    }
  }

  TEST_CASE("non-increasing in N") {
    for (auto [bb, bf] : {std::pair{0.5, 0.5}, {2.0, 2.0}, {0.5, 1.0}, {1.0, 2.0}}) {
      const auto p = DiscriminationPair::from_betas(bf, bb);
      for (double tau = 0.05; tau <= 5.0; tau += 0.05) {
        double prev = 0.5;
        for (double n : {1.0, 2.5, 10.0, 30.0, 100.0, 300.0}) {
          const double d = ideal_delta(p, BlochVector::excited(), tau, n).delta;
          CHECK(d <= prev * (1 + 1e-12));
          prev = d;
        }
      }
    }
  }

  TEST_CASE("rejects non-positive N") {
    const auto p = DiscriminationPair::from_betas(1.0, 1.0);
    CHECK_THROWS_AS(ideal_delta(p, BlochVector::excited(), 1.0, 0.0), DomainError);
  }
}

TEST_SUITE("KeyedUniform") {
  TEST_CASE("test vectors") {
    static_assert(KeyedUniform(0).word(0, 0) == 0x238275BC38FCBE91ULL);
    CHECK(KeyedUniform(12345).word(0, 0) == 0xA9FB86AFF8EE1B6DULL);
    CHECK(KeyedUniform(12345).word(7, 99) == 0x59329E80F6070F27ULL);
    CHECK(KeyedUniform(~0ULL).word(1ULL << 40, 3) == 0x4B2660D904067D97ULL);
    CHECK(KeyedUniform(0).uniform(0, 0) == 0.13870941014555427);
    CHECK(KeyedUniform(12345).uniform(0, 0) == 0.66399423404885061);
    CHECK(KeyedUniform(12345).uniform(7, 99) == 0.34842863701308258);
    CHECK(KeyedUniform(~0ULL).uniform(1ULL << 40, 3) == 0.29355435655818407);
  }

  TEST_CASE("roughly uniform") {
    const KeyedUniform rng(kTestSeed);
    int bins[10] = {};
    double sum = 0.0;
    for (std::uint64_t r = 0; r < 100; ++r) {
      for (std::uint64_t s = 0; s < 1000; ++s) {
        const double u = rng.uniform(r, s);
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        ++bins[static_cast<int>(u * 10)];
        sum += u;
      }
    }
    CHECK(sum / 1e5 == doctest::Approx(0.5).epsilon(0.01));
    double chi2 = 0.0;
    for (int b : bins) chi2 += (b - 1e4) * (b - 1e4) / 1e4;
    CHECK(chi2 < 30.0);  // 9 degrees of freedom
  }
}

TEST_SUITE("simulate_and_decide") {
  const auto pair = DiscriminationPair::from_betas(0.5, 0.5);

  TEST_CASE("deterministic and independent of the worker count") {
    const auto a = simulate_and_decide(7, 50, BathStatistics::Bosonic, pair, BlochVector::excited(), 0.4, 300, 1);
    const auto b = simulate_and_decide(7, 50, BathStatistics::Bosonic, pair, BlochVector::excited(), 0.4, 300, 4);
    REQUIRE(a.trials.size() == b.trials.size());
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
      CHECK(a.trials[i].n0 == b.trials[i].n0);
      CHECK(a.trials[i].posterior.bosonic == b.trials[i].posterior.bosonic);
      CHECK(a.trials[i].decision == b.trials[i].decision);
    }
    CHECK(a.n_correct == b.n_correct);
    CHECK(a.n_correct + a.n_wrong == 300);
    const auto c = simulate_and_decide(8, 50, BathStatistics::Bosonic, pair, BlochVector::excited(), 0.4, 300, 1);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.trials.size(); ++i) any_diff |= a.trials[i].n0 != c.trials[i].n0;
    CHECK(any_diff);
  }

  TEST_CASE("certain outcomes never produce zeros") {
    const auto r = simulate_and_decide(1, 100, BathStatistics::Fermionic, pair, BlochVector::excited(), 0.0, 50);
    for (const auto& t : r.trials) {
      CHECK(t.n0 == 0);
      CHECK(t.n1 == 100);
      CHECK(t.decision == BathStatistics::Fermionic);
    }
  }

  TEST_CASE("records are consistent") {
    const auto r = simulate_and_decide(3, 40, BathStatistics::Fermionic, pair, BlochVector::excited(), 0.8, 200);
    for (const auto& t : r.trials) {
      CHECK(t.n0 + t.n1 == 40);
      CHECK(t.posterior.bosonic + t.posterior.fermionic == doctest::Approx(1.0).epsilon(1e-12));
      CHECK((t.decision == BathStatistics::Bosonic) == (t.posterior.bosonic > t.posterior.fermionic));
      CHECK(t.correct == (t.decision == BathStatistics::Fermionic));
    }
  }

  TEST_CASE("error rate matches the exact binomial sum") {
    const BlochVector a0 = BlochVector::excited();
    for (auto [tau, shots] : {std::pair{0.4, 10}, {0.4, 30}, {1.0, 20}}) {
      const auto mb = outcome_probabilities(pair.bosonic(), a0, tau);
      const auto mf = outcome_probabilities(pair.fermionic(), a0, tau);
      for (auto truth : {BathStatistics::Bosonic, BathStatistics::Fermionic}) {
        const int reps = 4000;
        const double p = exact_error(mb, mf, truth, shots);
        const auto r = simulate_and_decide(kTestSeed, shots, truth, pair, a0, tau, reps);
        const double sigma = std::sqrt(p * (1 - p) / reps);
        CAPTURE(tau);
        CAPTURE(shots);
        CHECK(std::abs(static_cast<double>(r.n_wrong) / reps - p) <= 4 * sigma + 1e-12);
      }
    }
  }

  TEST_CASE("argument checks") {
    CHECK_THROWS_AS(simulate_and_decide(1, 0, BathStatistics::Bosonic, pair, BlochVector::excited(), 1.0, 10), DomainError);
    CHECK_THROWS_AS(simulate_and_decide(1, 10, BathStatistics::Bosonic, pair, BlochVector::excited(), 1.0, 0), DomainError);
  }
}

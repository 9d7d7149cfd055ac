#include "bathprobe/bayesian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bathprobe/dynamics.hpp"
#include "bathprobe/errors.hpp"
#include "bathprobe/parallel.hpp"
#include "bathprobe/rng.hpp"

namespace bathprobe {

OutcomeModel OutcomeModel::from_sigma_z(double expectation) {
  const double p1 = std::clamp(0.5 * (1.0 + expectation), 0.0, 1.0);
  return {1.0 - p1, p1};
}

OutcomeModel outcome_probabilities(const BathSpec& bath, const BlochVector& a0, double tau) {
  return OutcomeModel::from_sigma_z(evolve(a0, bath, tau).az());
}

namespace {

double count_term(double n, double p) {
  if (n == 0.0) return 0.0;
  if (p == 0.0) return -std::numeric_limits<double>::infinity();
  return n * std::log(p);
}

}  // namespace

double log_likelihood(const Counts& counts, const OutcomeModel& model) {
  if (counts.n0 < 0.0 || counts.n1 < 0.0 || !(counts.total() > 0.0)) {
    throw DomainError("log_likelihood: counts must be nonnegative with a positive total");
  }
  return count_term(counts.n0, model.p0) + count_term(counts.n1, model.p1);
}

Posterior posteriors(const Counts& counts, const OutcomeModel& model_b, const OutcomeModel& model_f,
                     double prior_b) {
  if (!(prior_b >= 0.0 && prior_b <= 1.0)) {
    throw DomainError("posteriors: prior must lie in [0, 1]");
  }
  const double ninf = -std::numeric_limits<double>::infinity();
  const double lb = prior_b > 0.0 ? log_likelihood(counts, model_b) + std::log(prior_b) : ninf;
  const double lf = prior_b < 1.0 ? log_likelihood(counts, model_f) + std::log1p(-prior_b) : ninf;
  if (lb == ninf && lf == ninf) {
    throw DomainError("posteriors: data impossible under both hypotheses");
  }
  // Logistic of the log-odds keeps tiny posteriors accurate.
  const double log_odds = lb - lf;
  if (log_odds >= 0.0) {
    const double f = 1.0 / (1.0 + std::exp(log_odds));
    return {1.0 - f, f};
  }
  const double b = 1.0 / (1.0 + std::exp(-log_odds));
  return {b, 1.0 - b};
}

BathStatistics decide(const Posterior& p) noexcept {
  return p.bosonic > p.fermionic ? BathStatistics::Bosonic : BathStatistics::Fermionic;
}

DeltaResult ideal_delta(const DiscriminationPair& pair, const BlochVector& a0, double tau,
                        double n_total) {
  if (!(n_total > 0.0) || std::isinf(n_total)) {
    throw DomainError("ideal_delta: N must be finite and > 0");
  }
  const OutcomeModel mb = outcome_probabilities(pair.bosonic(), a0, tau);
  const OutcomeModel mf = outcome_probabilities(pair.fermionic(), a0, tau);
  const Counts under_f{mf.p0 * n_total, mf.p1 * n_total};
  const Counts under_b{mb.p0 * n_total, mb.p1 * n_total};

  const double wrong_given_f = posteriors(under_f, mb, mf).bosonic;
  const double wrong_given_b = posteriors(under_b, mb, mf).fermionic;
  const double delta = 0.5 * (wrong_given_f + wrong_given_b);
  return {delta, 0.5 * std::pow(2.0 * delta, 1.0 / n_total)};
}

SimulationResult simulate_and_decide(std::uint64_t seed, int n_shots, BathStatistics truth,
                                     const DiscriminationPair& pair, const BlochVector& a0,
                                     double tau, int repetitions, unsigned jobs) {
  if (n_shots < 1) throw DomainError("simulate_and_decide: n_shots must be >= 1");
  if (repetitions < 1) throw DomainError("simulate_and_decide: repetitions must be >= 1");

  const OutcomeModel mb = outcome_probabilities(pair.bosonic(), a0, tau);
  const OutcomeModel mf = outcome_probabilities(pair.fermionic(), a0, tau);
  const OutcomeModel& sampled = truth == BathStatistics::Bosonic ? mb : mf;
  const KeyedUniform rng(seed);

  SimulationResult result;
  result.trials.resize(static_cast<std::size_t>(repetitions));
  parallel_for(result.trials.size(), jobs, [&](std::size_t rep) {
    TrialRecord t;
    for (int shot = 0; shot < n_shots; ++shot) {
      if (rng.uniform(rep, static_cast<std::uint64_t>(shot)) < sampled.p0) {
        ++t.n0;
      } else {
        ++t.n1;
      }
    }
    t.posterior = posteriors({static_cast<double>(t.n0), static_cast<double>(t.n1)}, mb, mf);
    t.decision = decide(t.posterior);
    t.correct = t.decision == truth;
    result.trials[rep] = t;
  });
  for (const TrialRecord& t : result.trials) {
    if (t.correct) {
      ++result.n_correct;
    } else {
      ++result.n_wrong;
    }
  }
  return result;
}

}  // namespace bathprobe

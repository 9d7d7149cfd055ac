#pragma once

#include <cstdint>
#include <vector>

#include "bathprobe/bath.hpp"
#include "bathprobe/bloch.hpp"
#include "bathprobe/distinguishability.hpp"

namespace bathprobe {

// sigma_z outcome statistics: p0 for eigenvalue -1 (ground), p1 for +1.
struct OutcomeModel {
  double p0 = 0.5;
  double p1 = 0.5;

  static OutcomeModel from_sigma_z(double expectation);
};

// Outcome counts; fractional values represent the ideal (expected-count) limit.
struct Counts {
  double n0 = 0.0;
  double n1 = 0.0;

  double total() const noexcept { return n0 + n1; }
};

struct Posterior {
  double bosonic = 0.5;
  double fermionic = 0.5;
};

struct TrialRecord {
  std::uint64_t n0 = 0;
  std::uint64_t n1 = 0;
  Posterior posterior;
  BathStatistics decision = BathStatistics::Fermionic;
  bool correct = false;
};

OutcomeModel outcome_probabilities(const BathSpec& bath, const BlochVector& a0, double tau);

/// log P(counts | model) with 0 * log 0 = 0; -infinity for impossible data.
double log_likelihood(const Counts& counts, const OutcomeModel& model);

/// Bayes posterior over the two hypotheses. Throws DomainError when both
/// hypotheses assign zero probability to the data.
Posterior posteriors(const Counts& counts, const OutcomeModel& model_b, const OutcomeModel& model_f,
                     double prior_b = 0.5);

/// Bosonic iff the bosonic posterior is strictly larger; ties go to fermionic.
BathStatistics decide(const Posterior& p) noexcept;

struct DeltaResult {
  double delta = 0.5;
  double rescaled = 0.5;  // (2 delta)^(1/N) / 2
};

/// Expected discrimination error at the ideal counts N_i = P_i N under each
/// true hypothesis, averaged over the two hypotheses with a flat prior.
DeltaResult ideal_delta(const DiscriminationPair& pair, const BlochVector& a0, double tau,
                        double n_total);

struct SimulationResult {
  std::vector<TrialRecord> trials;
  std::uint64_t n_correct = 0;
  std::uint64_t n_wrong = 0;
};

/// Seeded Monte Carlo of the decision protocol. For repetition k, shot j draws
/// r = KeyedUniform(seed).uniform(k, j); r < P0 increments N0, otherwise N1.
SimulationResult simulate_and_decide(std::uint64_t seed, int n_shots, BathStatistics truth,
                                     const DiscriminationPair& pair, const BlochVector& a0,
                                     double tau, int repetitions, unsigned jobs = 1);

}  // namespace bathprobe

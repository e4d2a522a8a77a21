#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "gha/graph.hpp"

namespace gha {

/// G(n, 1/2): each unordered pair is an edge with probability 1/2, one bit of
/// mt19937_64 output per pair in (u, v) lexicographic order.
Graph sample_gnp_half(int n, std::uint64_t seed);

/// sqrt(24 ln n / n), the smallest epsilon the concentration lemma covers.
double concentration_epsilon(int n);

struct ConcentrationReport {
  int n = 0;
  double epsilon = 0;
  std::uint64_t samples = 0;
  /// min and max of delta(S) / (|S| (n - |S|) / 2) over the sampled S.
  boost::rational<std::int64_t> worst_low_ratio{1};
  boost::rational<std::int64_t> worst_high_ratio{1};
  std::uint64_t violations = 0;
};

/// Falsification probe for cut concentration. Sizes cycle through 1..n/2 so
/// every size class is sampled. Throws EpsilonTooSmall below
/// concentration_epsilon(n).
ConcentrationReport concentration_check(const Graph& graph, double epsilon,
                                        std::uint64_t subset_samples, std::uint64_t seed);

/// Max over `trials` uniformly random allocations of envy divided by
/// sum_i gap_i (1 - eps) i (n - i) / 2 at eps = concentration_epsilon(n).
/// Zero when all values are equal.
double arbitrary_allocation_ratio(const Graph& graph, const HouseValues& houses,
                                  std::uint64_t trials, std::uint64_t seed);

/// (1 + eps) / (1 - eps) at the default epsilon.
double allocation_ratio_envelope(int n);

struct RandomTrial {
  std::uint64_t seed = 0;
  int n = 0;
  std::size_t edges = 0;
  ConcentrationReport concentration;
  double allocation_ratio = 0;
  double envelope = 0;

  bool passed() const { return concentration.violations == 0 && allocation_ratio <= envelope; }
};

struct RandomTrialOptions {
  std::uint64_t subset_samples = 10000;
  std::uint64_t allocation_trials = 100;
  std::int64_t max_value = 1000000;
};

/// One sampled graph with random house values in [0, max_value]; the graph,
/// subsets and allocations draw from separate streams of `seed`.
RandomTrial run_random_trial(int n, std::uint64_t seed, const RandomTrialOptions& options = {});

struct SoftGateResult {
  std::vector<RandomTrial> trials;
  std::size_t failures = 0;
  /// Passes unless at least `max_failures` seeds fail.
  bool passed = true;
};

/// Runs trials for seeds base_seed, base_seed + 1, ... in parallel; results
/// keep seed order.
SoftGateResult random_soft_gate(int n, int seeds, std::uint64_t base_seed,
                                const RandomTrialOptions& options = {}, std::size_t max_failures = 2);

}  // namespace gha

#include "gha/random_graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <string>

#include "gha/error.hpp"
#include "gha/rng.hpp"

namespace gha {
namespace {

using Ratio = boost::rational<std::int64_t>;

constexpr std::uint64_t kSubsetStream = 1;
constexpr std::uint64_t kAllocationStream = 2;
constexpr std::uint64_t kValueStream = 3;

}  // namespace

Graph sample_gnp_half(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "n must be at least 1", n);
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 4 + 16);
  std::uint64_t bits = 0;
  int left = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (left == 0) {
        bits = rng.next();
        left = 64;
      }
      if (bits & 1) edges.emplace_back(u, v);
      bits >>= 1;
      --left;
    }
  }
  return Graph(n, std::move(edges));
}

double concentration_epsilon(int n) {
  if (n < 2) return 1.0;
  return std::sqrt(24.0 * std::log(static_cast<double>(n)) / n);
}

ConcentrationReport concentration_check(const Graph& graph, double epsilon,
                                        std::uint64_t subset_samples, std::uint64_t seed) {
  const int n = graph.n();
  if (n < 2) throw Error(ErrorKind::BadParameters, "need at least two vertices", n);
  const double threshold = concentration_epsilon(n);
  if (epsilon < threshold * (1 - 1e-12)) {
    throw Error(ErrorKind::EpsilonTooSmall,
                "epsilon " + std::to_string(epsilon) + " is below sqrt(24 ln n / n) = " +
                    std::to_string(threshold));
  }
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::uint64_t> adj(words * n, 0);
  for (auto [u, v] : graph.edges()) {
    adj[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
    adj[v * words + u / 64] |= std::uint64_t{1} << (u % 64);
  }

  ConcentrationReport report;
  report.n = n;
  report.epsilon = epsilon;
  Rng rng(mix_seed(seed, kSubsetStream));
  std::vector<Vertex> pool(n);
  std::vector<std::uint64_t> members(words);
  bool first = true;
  for (std::uint64_t t = 0; t < subset_samples; ++t) {
    const int size = 1 + static_cast<int>(t % static_cast<std::uint64_t>(n / 2));
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::fill(members.begin(), members.end(), 0);
    for (int i = 0; i < size; ++i) {
      const std::size_t j = i + rng.below(n - i);
      std::swap(pool[i], pool[j]);
      members[pool[i] / 64] |= std::uint64_t{1} << (pool[i] % 64);
    }
    std::int64_t cut = 0;
    for (int i = 0; i < size; ++i) {
      const std::uint64_t* row = &adj[pool[i] * words];
      for (std::size_t w = 0; w < words; ++w) cut += std::popcount(row[w] & ~members[w]);
    }
    const Ratio ratio(2 * cut, static_cast<std::int64_t>(size) * (n - size));
    if (first || ratio < report.worst_low_ratio) report.worst_low_ratio = ratio;
    if (first || ratio > report.worst_high_ratio) report.worst_high_ratio = ratio;
    first = false;
    const double r = boost::rational_cast<double>(ratio);
    if (r < 1 - epsilon || r > 1 + epsilon) ++report.violations;
    ++report.samples;
  }
  return report;
}

double arbitrary_allocation_ratio(const Graph& graph, const HouseValues& houses,
                                  std::uint64_t trials, std::uint64_t seed) {
  const int n = graph.n();
  if (houses.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::LengthMismatch, "expected one house value per vertex", n);
  }
  if (n < 2 || houses.spread() == 0) return 0.0;
  const double eps = concentration_epsilon(n);
  long double lower = 0;
  for (int i = 1; i < n; ++i) {
    lower += static_cast<long double>(houses.gap(i - 1)) * i * (n - i) / 2.0L;
  }
  lower *= (1 - eps);
  if (lower <= 0) {
    throw Error(ErrorKind::EpsilonTooSmall, "n is too small for a positive lower bound", n);
  }
  const Instance instance(graph, houses);
  Rng rng(mix_seed(seed, kAllocationStream));
  Allocation alloc;
  alloc.assignment.resize(n);
  long double worst = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (int i = 0; i < n; ++i) alloc.assignment[i] = i;
    rng.shuffle(alloc.assignment);
    worst = std::max(worst, static_cast<long double>(envy(instance, alloc)) / lower);
  }
  return static_cast<double>(worst);
}

double allocation_ratio_envelope(int n) {
  const double eps = concentration_epsilon(n);
  return (1 + eps) / (1 - eps);
}

RandomTrial run_random_trial(int n, std::uint64_t seed, const RandomTrialOptions& options) {
  RandomTrial trial;
  trial.seed = seed;
  trial.n = n;
  const Graph graph = sample_gnp_half(n, seed);
  trial.edges = graph.edge_count();
  const double eps = concentration_epsilon(n);
  trial.concentration = concentration_check(graph, eps, options.subset_samples, seed);

  Rng values_rng(mix_seed(seed, kValueStream));
  std::vector<BigInt> values(n);
  for (auto& v : values) v = values_rng.below(static_cast<std::uint64_t>(options.max_value) + 1);
  std::sort(values.begin(), values.end());
  trial.allocation_ratio =
      arbitrary_allocation_ratio(graph, HouseValues(std::move(values)), options.allocation_trials, seed);
  trial.envelope = allocation_ratio_envelope(n);
  return trial;
}

SoftGateResult random_soft_gate(int n, int seeds, std::uint64_t base_seed,
                                const RandomTrialOptions& options, std::size_t max_failures) {
  std::vector<std::future<RandomTrial>> pending;
  for (int s = 0; s < seeds; ++s) {
    pending.push_back(std::async(std::launch::async, run_random_trial, n, base_seed + s, options));
  }
  SoftGateResult result;
  for (auto& f : pending) {
    result.trials.push_back(f.get());
    if (!result.trials.back().passed()) ++result.failures;
  }
  result.passed = result.failures < max_failures;
  return result;
}

}  // namespace gha

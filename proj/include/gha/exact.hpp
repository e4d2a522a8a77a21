#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gha/graph.hpp"
#include "gha/layout.hpp"

namespace gha {

struct ExactResult {
  BigInt optimal_envy;
  Allocation witness;
  std::uint64_t states_explored = 0;
};

inline constexpr int kDefaultDpCap = 22;
inline constexpr int kBruteforceCap = 10;
inline constexpr int kDefaultCutwidthCap = 12;

/// Subset DP over prefix sets: the holders of houses 0..|S|-1 form S, and
/// envy = sum over prefixes of cut(S) * gap. Memory is 2^n entries.
/// Ties are broken toward the smallest vertex id for the highest remaining
/// house during back-pointer reconstruction.
ExactResult solve_exact_dp(const Instance& instance, int cap = kDefaultDpCap);

/// Minimum over all n! allocations; returns the lexicographically smallest
/// optimal assignment.
ExactResult solve_exact_bruteforce(const Instance& instance, int cap = kBruteforceCap);

/// Calls `visit` for every allocation whose envy is at most `bound`, once per
/// pattern of values (houses with equal value are interchangeable, so
/// each pattern is reported with equal-valued houses handed out in vertex
/// order). Returns the number of patterns visited.
std::uint64_t enumerate_allocations_within(
    const Instance& instance, const BigInt& bound,
    const std::function<void(const Allocation&)>& visit);

/// delta_T(k) for every k in [0, n] by rooted knapsack DP, O(n^2).
std::vector<std::int64_t> tree_min_cut_profile(const Graph& tree);

std::int64_t tree_min_cut_k(const Graph& tree, int k);

struct CutwidthResult {
  Layout layout;
  std::int64_t width = 0;
};

/// Branch and bound over prefix sets, pruning on partial width.
CutwidthResult cutwidth_exact_small(const Graph& graph, int cap = kDefaultCutwidthCap);

}  // namespace gha

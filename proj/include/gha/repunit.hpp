#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "gha/graph.hpp"

namespace gha {

/// Signed repunit terms: a term t stands for sgn(t) * (2^|t| - 1).
struct RepunitRepresentation {
  std::vector<int> terms;

  std::int64_t value() const;
  friend bool operator==(const RepunitRepresentation&, const RepunitRepresentation&) = default;
};

struct EleganceRecord {
  std::int64_t m = 0;
  int elegance = 0;
  RepunitRepresentation witness;
};

/// Breadth-first search from 0 over partial sums, using repunits with
/// 1 <= a <= bitlen(m) + 2 and partial sums in [-4m, 4m]. Memoized;
/// m is limited to 2^22.
EleganceRecord elegance(std::int64_t m);

/// Records for m = 1..upto from one search over [-4 upto, 4 upto]. The
/// largest table built so far is cached and shared.
std::vector<EleganceRecord> elegance_table(std::int64_t upto);

/// Elegance values only, index m (entry 0 unused), covering at least
/// 1..upto; served from the cache.
std::shared_ptr<const std::vector<std::uint8_t>> elegance_values(std::int64_t upto);

/// Maximal blocks of equal bits in the binary expansion of i >= 1.
int runs(std::uint64_t i);

/// delta of B_depth at i, from the tree knapsack DP (cached per depth).
std::int64_t delta_complete_binary(int depth, std::int64_t i);

/// Full delta profile of B_depth, index 0..n.
const std::vector<std::int64_t>& delta_profile_complete_binary(int depth);

/// B_depth with 89 zeros (rest ones) and with 94 zeros (rest ones).
std::pair<Instance, Instance> value_agnostic_gap_instances(int depth);

/// Counts the vertex sets of B_depth with the given size and cut, split by
/// whether they contain a child of the root.
struct CutSetCensus {
  std::uint64_t sets = 0;
  std::uint64_t containing_root_child = 0;
};

/// Enumerates every set with exactly `cut` crossing edges, as a union of the
/// pieces left after deleting `cut` tree edges. Intended for cut <= 3.
CutSetCensus census_cut_sets(int depth, int size, int cut);

/// Per-vertex value-based median test on B_depth in heap order: every
/// internal vertex x satisfies max(left) <= x <= min(right) or
/// max(right) <= x <= min(left), taken over the values in its two subtrees.
bool has_global_median_property(int depth, const Instance& instance, const Allocation& alloc);

}  // namespace gha

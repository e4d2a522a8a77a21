#pragma once

#include <string_view>

#include "gha/exact.hpp"
#include "gha/graph.hpp"
#include "gha/layout.hpp"

namespace gha {

enum class BoundName { TrickleDown, LayoutWidth, InOrder };

std::string_view bound_name_string(BoundName name);

struct ApproxCertificate {
  BigInt achieved_envy;
  /// Upper bound on achieved_envy implied by the guarantee used.
  BigInt guarantee_bound;
  BoundName bound_name = BoundName::LayoutWidth;
};

struct ApproxResult {
  Allocation allocation;
  ApproxCertificate certificate;
};

/// Recursive center-of-gravity allocation on a tree. The center takes the
/// largest remaining house; the components of T - v, ordered by smallest
/// vertex id, receive consecutive blocks from the bottom of the range.
/// Bound: max_degree * (h_n - h_1) * ceil(log2 n).
ApproxResult trickle_down(const Graph& tree, const HouseValues& houses);

/// The vertex at layout position j receives house j.
/// Bound: width * (h_n - h_1).
ApproxResult layout_allocation(const Instance& instance, const Layout& layout);

enum class LayoutStrategy { BfsOrder, DfsOrder, TreeTrickleOrder, ExactSmall };

/// BFS and DFS start from the smallest-id vertex of minimum degree and visit
/// neighbors in increasing id order. TreeTrickleOrder is the trickle_down
/// ranking with the values replaced by positions.
Layout heuristic_layout(const Graph& graph, LayoutStrategy strategy,
                        int exact_cap = kDefaultCutwidthCap);

/// Sorted houses along the in-order traversal of B_depth (heap numbering).
/// Bound: ceil(7/2 * sum_i L(min(i, n - i)) * (h_{i+1} - h_i)) where
/// L(m) = 1 if elegance(m) = 1 and max(elegance(m) - 1, 2) otherwise, a
/// lower bound on delta_{B_depth}(m).
ApproxResult inorder_allocation(int depth, const HouseValues& houses);

/// Lower bound on the optimum of (B_depth, houses) used by the in-order
/// certificate.
BigInt inorder_lower_bound(int depth, const HouseValues& houses);

}  // namespace gha

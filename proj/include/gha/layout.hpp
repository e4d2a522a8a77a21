#pragma once

#include <cstdint>
#include <vector>

#include "gha/graph.hpp"

namespace gha {

/// A vertex ordering and its width: the largest prefix cut.
class Layout {
 public:
  Layout() = default;
  /// Throws LengthMismatch / NotABijection for a non-permutation.
  static Layout from_order(const Graph& graph, std::vector<Vertex> order);

  const std::vector<Vertex>& order() const noexcept { return order_; }
  std::int64_t width() const noexcept { return width_; }
  /// Prefix cuts for l = 1..n-1.
  const std::vector<std::int64_t>& prefix_cuts() const noexcept { return prefix_cuts_; }

 private:
  std::vector<Vertex> order_;
  std::vector<std::int64_t> prefix_cuts_;
  std::int64_t width_ = 0;
};

}  // namespace gha

#include "gha/layout.hpp"

#include <algorithm>
#include <string>

#include "gha/error.hpp"

namespace gha {

Layout Layout::from_order(const Graph& graph, std::vector<Vertex> order) {
  const int n = graph.n();
  if (order.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::LengthMismatch,
                "layout has " + std::to_string(order.size()) + " entries for " +
                    std::to_string(n) + " vertices",
                static_cast<std::int64_t>(order.size()));
  }
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    if (v < 0 || v >= n || position[v] != -1) {
      throw Error(ErrorKind::NotABijection,
                  "layout position " + std::to_string(i) + " repeats or is out of range", i);
    }
    position[v] = i;
  }
  Layout layout;
  layout.order_ = std::move(order);
  std::int64_t cut = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const Vertex v = layout.order_[i];
    for (Vertex w : graph.neighbors(v)) cut += position[w] < i ? -1 : 1;
    layout.prefix_cuts_.push_back(cut);
    layout.width_ = std::max(layout.width_, cut);
  }
  return layout;
}

}  // namespace gha

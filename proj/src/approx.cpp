#include "gha/approx.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "gha/error.hpp"
#include "gha/families.hpp"
#include "gha/repunit.hpp"

namespace gha {
namespace {

int ceil_log2(std::int64_t n) {
  return n <= 1 ? 0 : static_cast<int>(std::bit_width(static_cast<std::uint64_t>(n - 1)));
}

void require_tree(const Graph& graph) {
  if (!graph.is_connected()) throw Error(ErrorKind::Disconnected, "trickle_down needs a connected tree");
  if (!graph.is_tree()) throw Error(ErrorKind::NotATree, "trickle_down needs a tree");
}

/// House index per vertex from the TrickleDown recursion, using an explicit
/// work list of (component seed, house range).
std::vector<int> trickle_ranks(const Graph& tree) {
  const int n = tree.n();
  std::vector<int> rank(n, -1);
  if (n == 0) return rank;
  std::vector<char> placed(n, 0);
  std::vector<int> parent(n), size(n), order;
  order.reserve(n);

  struct Task {
    Vertex seed;
    int lo;  // houses [lo, hi)
    int hi;
  };
  std::vector<Task> work{{0, 0, n}};
  while (!work.empty()) {
    const Task task = work.back();
    work.pop_back();
    // Collect the component and its subtree sizes rooted at the seed.
    order.clear();
    order.push_back(task.seed);
    parent[task.seed] = -1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Vertex v = order[head];
      for (Vertex w : tree.neighbors(v)) {
        if (!placed[w] && w != parent[v]) {
          parent[w] = v;
          order.push_back(w);
        }
      }
    }
    const int total = static_cast<int>(order.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      size[*it] = 1;
      for (Vertex w : tree.neighbors(*it)) {
        if (!placed[w] && w != parent[*it]) size[*it] += size[w];
      }
    }
    Vertex center = -1;
    for (Vertex v : order) {
      int largest = total - size[v];
      for (Vertex w : tree.neighbors(v)) {
        if (!placed[w] && w != parent[v]) largest = std::max(largest, size[w]);
      }
      if (2 * largest <= total && (center == -1 || v < center)) center = v;
    }
    placed[center] = 1;
    rank[center] = task.hi - 1;

    // Pieces of the component minus the center, keyed by smallest vertex id.
    struct Piece {
      Vertex smallest;
      Vertex seed;
      int size;
    };
    std::vector<Piece> pieces;
    for (Vertex w : tree.neighbors(center)) {
      if (placed[w]) continue;
      Piece piece{w, w, 0};
      std::vector<Vertex> stack{w};
      parent[w] = center;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        ++piece.size;
        piece.smallest = std::min(piece.smallest, v);
        for (Vertex x : tree.neighbors(v)) {
          if (!placed[x] && x != parent[v]) {
            parent[x] = v;
            stack.push_back(x);
          }
        }
      }
      pieces.push_back(piece);
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& a, const Piece& b) { return a.smallest < b.smallest; });
    int lo = task.lo;
    for (const Piece& piece : pieces) {
      work.push_back({piece.seed, lo, lo + piece.size});
      lo += piece.size;
    }
  }
  return rank;
}

std::vector<Vertex> search_order(const Graph& graph, bool breadth_first) {
  const int n = graph.n();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  auto start_vertex = [&] {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!seen[v] && (best == -1 || graph.degree(v) < graph.degree(best))) best = v;
    }
    return best;
  };
  for (Vertex s = start_vertex(); s != -1; s = start_vertex()) {
    if (breadth_first) {
      seen[s] = 1;
      const std::size_t first = order.size();
      order.push_back(s);
      for (std::size_t head = first; head < order.size(); ++head) {
        for (Vertex w : graph.neighbors(order[head])) {
          if (!seen[w]) {
            seen[w] = 1;
            order.push_back(w);
          }
        }
      }
    } else {
      // Preorder DFS; neighbors pushed in reverse so the smallest is visited first.
      std::vector<Vertex> stack{s};
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        if (seen[v]) continue;
        seen[v] = 1;
        order.push_back(v);
        auto nb = graph.neighbors(v);
        for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
          if (!seen[*it]) stack.push_back(*it);
        }
      }
    }
  }
  return order;
}

}  // namespace

std::string_view bound_name_string(BoundName name) {
  switch (name) {
    case BoundName::TrickleDown: return "TrickleDown";
    case BoundName::LayoutWidth: return "LayoutWidth";
    case BoundName::InOrder: return "InOrder";
  }
  return "unknown";
}

ApproxResult trickle_down(const Graph& tree, const HouseValues& houses) {
  if (houses.size() != static_cast<std::size_t>(tree.n())) {
    throw Error(ErrorKind::LengthMismatch, "house count differs from vertex count",
                static_cast<std::int64_t>(houses.size()));
  }
  require_tree(tree);
  ApproxResult result;
  result.allocation.assignment = trickle_ranks(tree);
  Instance instance(tree, houses);
  result.certificate.achieved_envy = envy(instance, result.allocation);
  result.certificate.guarantee_bound =
      houses.spread() * tree.max_degree() * ceil_log2(tree.n());
  result.certificate.bound_name = BoundName::TrickleDown;
  return result;
}

ApproxResult layout_allocation(const Instance& instance, const Layout& layout) {
  const int n = instance.n();
  if (layout.order().size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::LengthMismatch, "layout length differs from vertex count",
                static_cast<std::int64_t>(layout.order().size()));
  }
  // Re-derive the width against this graph; the layout may come from elsewhere.
  const Layout checked = Layout::from_order(instance.graph, layout.order());
  ApproxResult result;
  result.allocation.assignment.assign(n, 0);
  for (int j = 0; j < n; ++j) result.allocation.assignment[checked.order()[j]] = j;
  result.certificate.achieved_envy = envy(instance, result.allocation);
  result.certificate.guarantee_bound = instance.houses.spread() * checked.width();
  result.certificate.bound_name = BoundName::LayoutWidth;
  return result;
}

Layout heuristic_layout(const Graph& graph, LayoutStrategy strategy, int exact_cap) {
  switch (strategy) {
    case LayoutStrategy::BfsOrder:
      return Layout::from_order(graph, search_order(graph, true));
    case LayoutStrategy::DfsOrder:
      return Layout::from_order(graph, search_order(graph, false));
    case LayoutStrategy::TreeTrickleOrder: {
      if (!graph.is_tree()) throw Error(ErrorKind::NotATree, "TreeTrickleOrder needs a tree");
      const auto rank = trickle_ranks(graph);
      std::vector<Vertex> order(graph.n());
      for (Vertex v = 0; v < graph.n(); ++v) order[rank[v]] = v;
      return Layout::from_order(graph, std::move(order));
    }
    case LayoutStrategy::ExactSmall:
      return cutwidth_exact_small(graph, exact_cap).layout;
  }
  throw Error(ErrorKind::BadParameters, "unknown layout strategy");
}

BigInt inorder_lower_bound(int depth, const HouseValues& houses) {
  if (depth < 0 || depth > 23) throw Error(ErrorKind::OutOfRange, "depth must lie in [0, 23]", depth);
  const std::int64_t n = (std::int64_t{1} << (depth + 1)) - 1;
  if (static_cast<std::int64_t>(houses.size()) != n) {
    throw Error(ErrorKind::NotCompleteTreeSize,
                "B_" + std::to_string(depth) + " has " + std::to_string(n) + " vertices, got " +
                    std::to_string(houses.size()) + " houses",
                static_cast<std::int64_t>(houses.size()));
  }
  const auto el = elegance_values(std::max<std::int64_t>(n / 2, 1));
  BigInt total = 0;
  for (std::int64_t i = 1; i < n; ++i) {
    const BigInt gap = houses.gap(i - 1);
    if (gap == 0) continue;
    const int e = (*el)[std::min(i, n - i)];
    const int weight = e == 1 ? 1 : std::max(e - 1, 2);
    total += gap * weight;
  }
  return total;
}

ApproxResult inorder_allocation(int depth, const HouseValues& houses) {
  const BigInt lower = inorder_lower_bound(depth, houses);
  const auto sequence = families::inorder_sequence(depth);
  const int n = static_cast<int>(sequence.size());
  ApproxResult result;
  result.allocation.assignment.assign(n, 0);
  for (int j = 0; j < n; ++j) result.allocation.assignment[sequence[j]] = j;
  Instance instance(families::complete_binary_tree(depth), houses);
  result.certificate.achieved_envy = envy(instance, result.allocation);
  result.certificate.guarantee_bound = (7 * lower + 1) / 2;
  result.certificate.bound_name = BoundName::InOrder;
  return result;
}

}  // namespace gha

#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "gha/families.hpp"
#include "gha/graph.hpp"
#include "gha/rng.hpp"

namespace gha::test {

inline HouseValues values_of(std::vector<long long> raw) {
  std::sort(raw.begin(), raw.end());
  std::vector<BigInt> out(raw.begin(), raw.end());
  return HouseValues(std::move(out));
}

inline Instance make_instance(Graph g, std::vector<long long> raw) {
  return Instance(std::move(g), values_of(std::move(raw)));
}

inline std::vector<BigInt> big(std::initializer_list<long long> raw) {
  return std::vector<BigInt>(raw.begin(), raw.end());
}

/// Houses of the B_3 counterexample: seven 0s, three 1s, one 2, four 3s.
inline Instance b3ref_instance() {
  return make_instance(families::complete_binary_tree(3),
                       {0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 3, 3, 3, 3});
}

// Value patterns in heap order (root, its two children, the four grandchildren,
// then the eight leaves left to right).
inline std::vector<BigInt> b3ref_top_pattern() {
  return big({1, 0, 3, 0, 0, 1, 3, 0, 0, 0, 0, 1, 2, 3, 3});
}
inline std::vector<BigInt> b3ref_bottom_pattern() {
  return big({2, 0, 3, 0, 0, 1, 3, 0, 0, 0, 0, 1, 1, 3, 3});
}

/// Per-vertex values under an allocation.
inline std::vector<BigInt> pattern_of(const Instance& instance, const Allocation& alloc) {
  std::vector<BigInt> out(alloc.size());
  for (std::size_t v = 0; v < alloc.size(); ++v) out[v] = instance.houses[alloc.assignment[v]];
  return out;
}

inline Allocation random_allocation(int n, Rng& rng) {
  Allocation a;
  a.assignment.resize(n);
  for (int i = 0; i < n; ++i) a.assignment[i] = i;
  rng.shuffle(a.assignment);
  return a;
}

inline HouseValues random_values(int n, long long max_value, Rng& rng) {
  std::vector<long long> raw(n);
  for (auto& x : raw) x = static_cast<long long>(rng.below(static_cast<std::uint64_t>(max_value) + 1));
  return values_of(std::move(raw));
}

/// Random graph on n vertices: G(n, p) with no connectivity guarantee.
inline Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.unit() < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

/// Direct edge sum, independent of the library's envy().
inline BigInt naive_envy(const Instance& instance, const Allocation& alloc) {
  BigInt total = 0;
  for (auto [u, v] : instance.graph.edges()) {
    BigInt d = instance.houses[alloc.assignment[u]] - instance.houses[alloc.assignment[v]];
    total += d < 0 ? BigInt(-d) : d;
  }
  return total;
}

/// Minimum envy over all n! allocations, by plain permutation enumeration.
inline BigInt naive_optimum(const Instance& instance) {
  Allocation a;
  a.assignment.resize(instance.n());
  for (int i = 0; i < instance.n(); ++i) a.assignment[i] = i;
  BigInt best = -1;
  do {
    BigInt e = naive_envy(instance, a);
    if (best < 0 || e < best) best = e;
  } while (std::next_permutation(a.assignment.begin(), a.assignment.end()));
  return best < 0 ? BigInt(0) : best;
}

/// Sizes of the components of tree - v.
inline std::vector<int> components_without(const Graph& g, Vertex removed) {
  std::vector<int> sizes;
  std::vector<char> seen(g.n(), 0);
  seen[removed] = 1;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    int size = 0;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

}  // namespace gha::test

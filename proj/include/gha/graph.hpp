#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gha/bigint.hpp"

namespace gha {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1 with CSR adjacency.
/// Construction rejects self-loops, duplicate edges and out-of-range
/// endpoints; the offending edge index is attached to the error.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Neighbors of v in increasing order.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const noexcept { return max_degree_; }

  bool is_connected() const;
  /// Connected with exactly n-1 edges.
  bool is_tree() const;
  bool is_regular() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> targets_;
  int max_degree_ = 0;
};

/// Sorted (non-decreasing) multiset of house values h_1 <= ... <= h_n.
class HouseValues {
 public:
  HouseValues() = default;
  explicit HouseValues(std::vector<BigInt> values);

  std::size_t size() const noexcept { return values_.size(); }
  const BigInt& operator[](std::size_t i) const { return values_[i]; }
  std::span<const BigInt> values() const noexcept { return values_; }

  /// h_n - h_1, zero when empty.
  BigInt spread() const;
  /// h_{i+1} - h_i for the 0-based gap index i in [0, n-1).
  BigInt gap(std::size_t i) const { return values_[i + 1] - values_[i]; }

  friend bool operator==(const HouseValues&, const HouseValues&) = default;

 private:
  std::vector<BigInt> values_;
};

struct Instance {
  Instance() = default;
  Instance(Graph g, HouseValues h);

  Graph graph;
  HouseValues houses;
  bool connected = false;

  int n() const noexcept { return graph.n(); }
  friend bool operator==(const Instance& a, const Instance& b) {
    return a.graph == b.graph && a.houses == b.houses;
  }
};

/// Unvalidated instance as it appears on the wire.
struct InstanceData {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<BigInt> values;
};

/// vertex -> house index. Houses are indices into the sorted value list, so
/// equal values stay distinguishable.
struct Allocation {
  std::vector<int> assignment;

  std::size_t size() const noexcept { return assignment.size(); }
  /// house index -> vertex. Requires a valid bijection.
  std::vector<Vertex> holders() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

struct PrefixCutProfile {
  /// cuts[i]: edges between the holders of houses 0..i and everyone else.
  std::vector<std::int64_t> cuts;
};

struct SubsetCut {
  std::vector<Vertex> subset;
  std::int64_t cut = 0;
};

Instance validate_instance(const InstanceData& data);
InstanceData to_data(const Instance& instance);

/// Throws NotABijection (index = first offending vertex) unless
/// `alloc` is a permutation of [0, n).
void check_allocation(const Allocation& alloc, int n);

BigInt envy(const Instance& instance, const Allocation& alloc);

/// Turns a per-vertex value pattern into an allocation, handing equal-valued
/// houses out in vertex order. Throws NotABijection when the pattern is not a
/// rearrangement of the house values.
Allocation allocation_from_values(const HouseValues& houses,
                                  std::span<const BigInt> per_vertex);

PrefixCutProfile prefix_cut_profile(const Instance& instance,
                                    const Allocation& alloc);

/// sum_i cuts[i] * (h_{i+1} - h_i)
BigInt weighted_profile_sum(const PrefixCutProfile& profile,
                            const HouseValues& houses);

std::int64_t cut_size(const Graph& graph, std::span<const Vertex> subset);

inline constexpr int kDefaultMinCutCap = 24;

/// delta_G(k) by enumerating all k-subsets. Returns the lexicographically
/// first minimizing subset in mask order.
SubsetCut min_cut_k_bruteforce(const Graph& graph, int k,
                               int cap = kDefaultMinCutCap);

/// A vertex whose removal leaves components of at most n/2 vertices; the
/// smallest such id. Linear time.
Vertex center_of_gravity(const Graph& tree);

/// Bit masks of neighbors, for n <= 64.
std::vector<std::uint64_t> adjacency_masks(const Graph& graph);

}  // namespace gha

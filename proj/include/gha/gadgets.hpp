#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "gha/graph.hpp"
#include "gha/rng.hpp"

namespace gha {

using Rational = boost::rational<std::int64_t>;

struct ThreePartitionInstance {
  std::vector<std::int64_t> items;
  int m = 0;
  std::int64_t T = 0;

  /// Throws BadParameters unless there are 3m positive items summing to mT;
  /// `strict` also demands T/4 < a_i < T/2.
  void validate(bool strict = false) const;
};

struct PartitionWitness {
  std::vector<std::array<int, 3>> triplets;
};

/// Throws InvalidWitness unless the triplets partition the item indices and
/// each sums to T.
void check_witness(const ThreePartitionInstance& tp, const PartitionWitness& witness);

/// Brute-force search for a witness; intended for a handful of items.
std::optional<PartitionWitness> find_witness(const ThreePartitionInstance& tp);

enum class GadgetFamily { Depth2, Clique, Grid, Expander, BoundedTree };

std::string_view family_name(GadgetFamily family);
GadgetFamily parse_family(std::string_view name);

struct GadgetInstance {
  Instance instance;
  /// Per-vertex role tag such as "root", "hub(2)", "filler(2)",
  /// "grid(1,0,3)", "tree-node", "pistil(medium,0)" or "petal(large,4)".
  std::vector<std::string> roles;
  std::int64_t C = 1;
  GadgetFamily family = GadgetFamily::Depth2;
  ThreePartitionInstance tp;
  /// Vertices of the component built for item i (the small flower for the
  /// bounded-degree tree).
  std::vector<std::vector<Vertex>> components;
  /// Root, or the vertices of the binary hub tree.
  std::vector<Vertex> hub;
  /// Bounded-degree tree only: medium flowers along the path, and the two
  /// large flowers hanging below item i's small flower.
  std::vector<std::vector<Vertex>> medium;
  std::vector<std::vector<Vertex>> large;
  std::uint64_t seed = 0;
  /// Expander only: the certified expansion ratio of each component.
  std::vector<Rational> expansion;
};

/// Root r with 3m children x_i; x_i has C a_i - 1 leaf children.
/// Values: one 0 and CT copies of each j in [m].
GadgetInstance gen_depth2_tree(const ThreePartitionInstance& tp, std::int64_t C);

/// Cliques K_{C a_i}; the root is joined to the first vertex of each.
GadgetInstance gen_clique(const ThreePartitionInstance& tp, std::int64_t C);

/// Grids with C rows and C a_i columns (row-major), vertex (0,0) of grid i
/// joined to leaf i of the smallest complete binary tree with >= 3m leaves.
/// Values: C^2 T copies of each j in [m] plus one 0 per hub-tree vertex.
GadgetInstance gen_grid(const ThreePartitionInstance& tp, std::int64_t C);

/// Random 3-regular graphs on C a_i vertices (configuration model with
/// rejection), each certified to have expansion >= 1/100 and retried with a
/// fresh seed up to 50 times, attached to a hub tree as in gen_grid.
GadgetInstance gen_expander(const ThreePartitionInstance& tp, std::int64_t C, std::uint64_t seed);

struct GridCutReport {
  std::uint64_t subsets_checked = 0;
  std::uint64_t violations = 0;
  /// Smallest delta(A) - min(sqrt|A|, r/2) seen.
  double min_slack = 0;
  bool exhaustive = false;
};

inline constexpr int kDefaultGridCap = 18;

/// Checks delta(A) >= min(sqrt|A|, r/2) on Grid(r, c) for nonempty A with
/// |A| <= rc/2. Exhaustive when rc <= exhaustive_cap (a set and its
/// complement are counted once when |A| = rc/2), otherwise `samples`
/// random and grown subsets.
GridCutReport check_grid_cut_lemma(int r, int c, int exhaustive_cap = kDefaultGridCap,
                                   std::uint64_t samples = 100000, std::uint64_t seed = 1);

inline constexpr int kDefaultCheegerCap = 20;

/// min delta(S)/|S| over nonempty S with |S| <= n/2: exhaustive up to the
/// cap, otherwise over `samples` random subsets and BFS balls.
Rational check_cheeger_constant(const Graph& graph, int exhaustive_cap = kDefaultCheegerCap,
                                std::uint64_t samples = 20000, std::uint64_t seed = 1);

/// Seeded simple 3-regular graph on n vertices (n even, n >= 4).
Graph random_cubic_graph(int n, Rng& rng);

struct Flower {
  Graph tree;
  Vertex pistil = 0;
  std::vector<Vertex> petal_roots;
  int n = 0;
  int k = 0;
  /// Vertices are numbered in preorder; subtree_size[v] is the size of the
  /// sub-flower rooted at v and parent[v] its parent (-1 for the pistil).
  std::vector<int> subtree_size;
  std::vector<Vertex> parent;
};

Flower build_flower(int n, int k);

/// The sizes of the d petals of F(n, k), in construction order.
std::vector<int> flower_petal_sizes(int n, int k);

struct FlowerReport {
  std::uint64_t nodes_checked = 0;
  std::uint64_t violations = 0;
};

/// Conditions (a)-(d) at every node, plus max degree <= k + 1.
FlowerReport check_flower_definition(const Flower& flower);

struct EvenCutReport {
  std::uint64_t subsets_checked = 0;
  std::uint64_t violations = 0;
  std::int64_t min_cut = 0;
  bool exhaustive = false;
};

inline constexpr int kDefaultFlowerCap = 20;

/// delta(A) >= 2 for even, nonempty A avoiding the pistil.
EvenCutReport check_flower_even_cut(const Flower& flower, int exhaustive_cap = kDefaultFlowerCap,
                                    std::uint64_t samples = 10000, std::uint64_t seed = 1);

struct BoundedTreeOptions {
  int small_k = 99;
  int large_k = 999;
  /// Skip the a_i >= 1000 scaling requirement.
  bool desk_scale = false;
};

/// Path of 3m medium flowers F(T, small_k); medium pistil i is joined to the
/// pistil of a small flower F(a_i, small_k), which is joined to the pistils
/// of two large flowers F(10T, large_k). 64mT vertices.
GadgetInstance gen_bounded_tree_instance(const ThreePartitionInstance& tp,
                                         const BoundedTreeOptions& options = {});

/// s(j) = (64 m T)^(2j).
BigInt cluster_scale(const ThreePartitionInstance& tp, int j);

/// Value of each of the 4m + 1 clusters, lowest first.
std::vector<BigInt> bounded_tree_cluster_values(const ThreePartitionInstance& tp);

BigInt envy_yes_threshold(const ThreePartitionInstance& tp);

/// The certificate allocation built from a valid witness.
Allocation yes_allocation(const GadgetInstance& gadget, const PartitionWitness& witness);

/// 3 m^2 for the hub families, envy_yes_threshold for the bounded-degree tree.
BigInt yes_bound(const GadgetInstance& gadget);

}  // namespace gha

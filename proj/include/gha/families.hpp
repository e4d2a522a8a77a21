#pragma once

#include <vector>

#include "gha/graph.hpp"
#include "gha/rng.hpp"

namespace gha::families {

Graph path(int n);
Graph cycle(int n);
/// K_{1,leaves}; the center is vertex 0.
Graph star(int leaves);
Graph complete(int n);
/// r rows by c columns, row-major numbering.
Graph grid(int rows, int cols);
/// B_depth in heap order: root 0, children of v are 2v+1 and 2v+2.
Graph complete_binary_tree(int depth);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Uniform labelled tree from a random Pruefer sequence.
Graph random_tree(int n, Rng& rng);
/// Random spanning tree plus each remaining pair with probability p.
Graph random_connected(int n, double extra_edge_probability, Rng& rng);

/// Vertices of B_depth (heap numbering) in in-order.
std::vector<Vertex> inorder_sequence(int depth);

}  // namespace gha::families

#include "gha/families.hpp"

#include <functional>
#include <queue>

#include "gha/error.hpp"

namespace gha::families {

Graph path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw Error(ErrorKind::BadParameters, "a simple cycle needs n >= 3", n);
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph grid(int rows, int cols) {
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph(rows * cols, std::move(edges));
}

Graph complete_binary_tree(int depth) {
  if (depth < 0 || depth > 26) throw Error(ErrorKind::BadParameters, "depth out of range", depth);
  const int n = (1 << (depth + 1)) - 1;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
  return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), std::move(edges));
}

Graph random_tree(int n, Rng& rng) {
  if (n <= 1) return Graph(std::max(n, 0), {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::vector<int> code(n - 2);
  for (int& x : code) x = static_cast<int>(rng.below(n));
  std::vector<int> degree(n, 1);
  for (int x : code) ++degree[x];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int x : code) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  int u = leaves.top();
  leaves.pop();
  edges.emplace_back(u, leaves.top());
  return Graph(n, std::move(edges));
}

Graph random_connected(int n, double extra_edge_probability, Rng& rng) {
  Graph tree = random_tree(n, rng);
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  for (auto [u, v] : edges) present[u][v] = present[v][u] = 1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!present[u][v] && rng.unit() < extra_edge_probability) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

std::vector<Vertex> inorder_sequence(int depth) {
  const int n = (1 << (depth + 1)) - 1;
  std::vector<Vertex> out;
  out.reserve(n);
  std::vector<Vertex> stack;
  Vertex v = 0;
  while (v < n || !stack.empty()) {
    while (v < n) {
      stack.push_back(v);
      v = 2 * v + 1;
    }
    v = stack.back();
    stack.pop_back();
    out.push_back(v);
    v = 2 * v + 2;
  }
  return out;
}

}  // namespace gha::families

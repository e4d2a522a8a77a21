#include "gha/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "gha/error.hpp"

namespace gha {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw Error(ErrorKind::BadParameters, "negative vertex count");
  std::vector<int> degree(static_cast<std::size_t>(n_), 0);
  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge " + std::to_string(i) + " has an endpoint outside [0, " +
                      std::to_string(n_) + ")",
                  static_cast<std::int64_t>(i));
    }
    if (u == v) {
      throw Error(ErrorKind::SelfLoop,
                  "edge " + std::to_string(i) + " is a self-loop on vertex " +
                      std::to_string(u),
                  static_cast<std::int64_t>(i));
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw Error(ErrorKind::DuplicateEdge,
                  "edge " + std::to_string(i) + " repeats {" + std::to_string(u) +
                      "," + std::to_string(v) + "}",
                  static_cast<std::int64_t>(i));
    }
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  targets_.resize(edges_.size() * 2);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    targets_[fill[u]++] = v;
    targets_[fill[v]++] = u;
  }
  for (int v = 0; v < n_; ++v) {
    std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);
  }
  max_degree_ = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

bool Graph::is_tree() const {
  return n_ >= 1 && edges_.size() == static_cast<std::size_t>(n_ - 1) &&
         is_connected();
}

bool Graph::is_regular() const {
  for (int v = 1; v < n_; ++v) {
    if (degree(v) != degree(0)) return false;
  }
  return true;
}

HouseValues::HouseValues(std::vector<BigInt> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0) {
      throw Error(ErrorKind::ParseError,
                  "house value " + std::to_string(i) + " is negative",
                  static_cast<std::int64_t>(i));
    }
    if (i > 0 && values_[i] < values_[i - 1]) {
      throw Error(ErrorKind::UnsortedValues,
                  "house value " + std::to_string(i) +
                      " is smaller than its predecessor",
                  static_cast<std::int64_t>(i));
    }
  }
}

BigInt HouseValues::spread() const {
  if (values_.empty()) return 0;
  return values_.back() - values_.front();
}

Instance::Instance(Graph g, HouseValues h) : graph(std::move(g)), houses(std::move(h)) {
  if (houses.size() != static_cast<std::size_t>(graph.n())) {
    throw Error(ErrorKind::LengthMismatch,
                "graph has " + std::to_string(graph.n()) + " vertices but " +
                    std::to_string(houses.size()) + " house values were given",
                static_cast<std::int64_t>(houses.size()));
  }
  connected = graph.is_connected();
}

Instance validate_instance(const InstanceData& data) {
  return Instance(Graph(data.n, data.edges), HouseValues(data.values));
}

InstanceData to_data(const Instance& instance) {
  InstanceData out;
  out.n = instance.graph.n();
  out.edges.assign(instance.graph.edges().begin(), instance.graph.edges().end());
  out.values.assign(instance.houses.values().begin(), instance.houses.values().end());
  return out;
}

std::vector<Vertex> Allocation::holders() const {
  std::vector<Vertex> out(assignment.size());
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    out[assignment[v]] = static_cast<Vertex>(v);
  }
  return out;
}

void check_allocation(const Allocation& alloc, int n) {
  if (alloc.assignment.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::NotABijection,
                "allocation has " + std::to_string(alloc.assignment.size()) +
                    " entries for " + std::to_string(n) + " vertices",
                static_cast<std::int64_t>(alloc.assignment.size()));
  }
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    int h = alloc.assignment[v];
    if (h < 0 || h >= n || used[h]) {
      throw Error(ErrorKind::NotABijection,
                  "vertex " + std::to_string(v) +
                      " has an out-of-range or repeated house index",
                  v);
    }
    used[h] = 1;
  }
}

namespace {

// |E| * (h_n - h_1) bounds every partial envy sum.
bool fits_in_int64(const Instance& instance) {
  BigInt bound = instance.houses.spread() * instance.graph.edge_count();
  return instance.houses.size() == 0 ||
         (instance.houses.values().back() <= std::numeric_limits<std::int64_t>::max() &&
          bound <= std::numeric_limits<std::int64_t>::max());
}

}  // namespace

BigInt envy(const Instance& instance, const Allocation& alloc) {
  check_allocation(alloc, instance.n());
  const auto& h = instance.houses;
  const auto& a = alloc.assignment;
  if (fits_in_int64(instance)) {
    std::vector<std::int64_t> small(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) small[i] = static_cast<std::int64_t>(h[i]);
    std::int64_t total = 0;
    for (auto [u, v] : instance.graph.edges()) {
      std::int64_t x = small[a[u]], y = small[a[v]];
      total += x > y ? x - y : y - x;
    }
    return total;
  }
  BigInt total = 0;
  for (auto [u, v] : instance.graph.edges()) {
    const BigInt& x = h[a[u]];
    const BigInt& y = h[a[v]];
    total += x > y ? BigInt(x - y) : BigInt(y - x);
  }
  return total;
}

Allocation allocation_from_values(const HouseValues& houses,
                                  std::span<const BigInt> per_vertex) {
  const std::size_t n = houses.size();
  if (per_vertex.size() != n) {
    throw Error(ErrorKind::LengthMismatch,
                "value pattern has " + std::to_string(per_vertex.size()) +
                    " entries for " + std::to_string(n) + " houses",
                static_cast<std::int64_t>(per_vertex.size()));
  }
  std::vector<std::size_t> next_free(n);
  Allocation alloc;
  alloc.assignment.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto values = houses.values();
    auto first = std::lower_bound(values.begin(), values.end(), per_vertex[v]);
    if (first == values.end() || *first != per_vertex[v]) {
      throw Error(ErrorKind::NotABijection,
                  "vertex " + std::to_string(v) + " carries a value that is not a house",
                  static_cast<std::int64_t>(v));
    }
    const std::size_t level = static_cast<std::size_t>(first - values.begin());
    const std::size_t house = level + next_free[level]++;
    if (house >= n || values[house] != per_vertex[v]) {
      throw Error(ErrorKind::NotABijection,
                  "vertex " + std::to_string(v) + " uses a value more often than it occurs",
                  static_cast<std::int64_t>(v));
    }
    alloc.assignment[v] = static_cast<int>(house);
  }
  return alloc;
}

PrefixCutProfile prefix_cut_profile(const Instance& instance, const Allocation& alloc) {
  check_allocation(alloc, instance.n());
  const Graph& g = instance.graph;
  const int n = g.n();
  PrefixCutProfile profile;
  if (n <= 1) return profile;
  profile.cuts.reserve(n - 1);
  std::vector<char> inside(n, 0);
  std::vector<Vertex> holder = alloc.holders();
  std::int64_t cut = 0;
  for (int i = 0; i + 1 < n; ++i) {
    Vertex v = holder[i];
    int inner = 0;
    for (Vertex w : g.neighbors(v)) inner += inside[w];
    cut += g.degree(v) - 2 * inner;
    inside[v] = 1;
    profile.cuts.push_back(cut);
  }
  return profile;
}

BigInt weighted_profile_sum(const PrefixCutProfile& profile, const HouseValues& houses) {
  if (profile.cuts.size() + 1 != houses.size() && !(profile.cuts.empty() && houses.size() <= 1)) {
    throw Error(ErrorKind::LengthMismatch, "profile length does not match house count");
  }
  BigInt total = 0;
  for (std::size_t i = 0; i < profile.cuts.size(); ++i) {
    total += houses.gap(i) * profile.cuts[i];
  }
  return total;
}

std::int64_t cut_size(const Graph& graph, std::span<const Vertex> subset) {
  std::vector<char> inside(static_cast<std::size_t>(graph.n()), 0);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    Vertex v = subset[i];
    if (v < 0 || v >= graph.n()) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "subset entry " + std::to_string(i) + " is not a vertex",
                  static_cast<std::int64_t>(i));
    }
    inside[v] = 1;
  }
  std::int64_t cut = 0;
  for (auto [u, v] : graph.edges()) cut += inside[u] != inside[v];
  return cut;
}

std::vector<std::uint64_t> adjacency_masks(const Graph& graph) {
  if (graph.n() > 64) {
    throw Error(ErrorKind::TooLarge, "bit-mask adjacency needs n <= 64", graph.n());
  }
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(graph.n()), 0);
  for (auto [u, v] : graph.edges()) {
    masks[u] |= std::uint64_t{1} << v;
    masks[v] |= std::uint64_t{1} << u;
  }
  return masks;
}

SubsetCut min_cut_k_bruteforce(const Graph& graph, int k, int cap) {
  const int n = graph.n();
  if (n > cap || n > 63) {
    throw Error(ErrorKind::TooLarge,
                "subset enumeration capped at n = " + std::to_string(cap), n);
  }
  if (k < 1 || k > n - 1) {
    throw Error(ErrorKind::OutOfRange, "k must lie in [1, n-1]", k);
  }
  const auto adj = adjacency_masks(graph);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::uint64_t best_mask = 0;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  // Gosper's hack walks k-subsets in increasing mask order.
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  while (s <= full) {
    std::int64_t cut = 0;
    const std::uint64_t outside = full & ~s;
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      cut += std::popcount(adj[std::countr_zero(rest)] & outside);
    }
    if (cut < best) {
      best = cut;
      best_mask = s;
    }
    const std::uint64_t c = s & -s;
    const std::uint64_t r = s + c;
    if (r == 0 || r > full + 1) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  SubsetCut out;
  out.cut = best;
  for (int v = 0; v < n; ++v) {
    if (best_mask >> v & 1) out.subset.push_back(v);
  }
  return out;
}

Vertex center_of_gravity(const Graph& tree) {
  const int n = tree.n();
  if (!tree.is_tree()) throw Error(ErrorKind::NotATree, "center of gravity needs a tree");
  std::vector<Vertex> parent(n, -1), order;
  order.reserve(n);
  std::vector<Vertex> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : tree.neighbors(v)) {
      if (parent[w] == -1) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> size(n, 1), heaviest_child(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    if (v == 0) continue;
    size[parent[v]] += size[v];
    heaviest_child[parent[v]] = std::max(heaviest_child[parent[v]], size[v]);
  }
  for (Vertex v = 0; v < n; ++v) {
    int largest = std::max(heaviest_child[v], n - size[v]);
    if (2 * largest <= n) return v;
  }
  throw Error(ErrorKind::NotATree, "no center of gravity found");
}

}  // namespace gha

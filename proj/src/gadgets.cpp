#include "gha/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "gha/error.hpp"

namespace gha {
namespace {

constexpr std::int64_t kMaxGadgetVertices = 20'000'000;

struct Builder {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::string> roles;

  Vertex add(std::string role) {
    roles.push_back(std::move(role));
    return n++;
  }
  void join(Vertex u, Vertex v) { edges.emplace_back(u, v); }
};

std::string tagged(std::string_view name, std::int64_t i) {
  return std::string(name) + "(" + std::to_string(i) + ")";
}

void check_size(std::int64_t vertices) {
  if (vertices > kMaxGadgetVertices) {
    throw Error(ErrorKind::TooLarge, "gadget would have " + std::to_string(vertices) + " vertices",
                vertices);
  }
}

void check_scale(std::int64_t C) {
  if (C < 1) throw Error(ErrorKind::BadParameters, "C must be at least 1", C);
}

/// Smallest complete binary tree with at least `leaves` leaves; returns the
/// leaf vertices in order.
std::vector<Vertex> add_hub_tree(Builder& b, int leaves, std::vector<Vertex>& hub) {
  int r = 0;
  while ((1 << r) < leaves) ++r;
  const int size = (1 << (r + 1)) - 1;
  const Vertex base = b.n;
  for (int v = 0; v < size; ++v) {
    hub.push_back(b.add("tree-node"));
    if (v > 0) b.join(base + (v - 1) / 2, base + v);
  }
  std::vector<Vertex> out;
  for (int i = 0; i < leaves; ++i) out.push_back(base + (1 << r) - 1 + i);
  return out;
}

/// `zeros` copies of 0, then `copies` copies of each j in [m].
HouseValues hub_values(std::int64_t zeros, std::int64_t copies, int m) {
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(zeros + copies * m));
  for (std::int64_t i = 0; i < zeros; ++i) values.emplace_back(0);
  for (int j = 1; j <= m; ++j) {
    for (std::int64_t i = 0; i < copies; ++i) values.emplace_back(j);
  }
  return HouseValues(std::move(values));
}

GadgetInstance finish(Builder& b, HouseValues values, GadgetFamily family,
                      const ThreePartitionInstance& tp, std::int64_t C) {
  GadgetInstance g;
  g.instance = Instance(Graph(b.n, std::move(b.edges)), std::move(values));
  g.roles = std::move(b.roles);
  g.family = family;
  g.tp = tp;
  g.C = C;
  return g;
}

std::int64_t cut_of(const Graph& g, const std::vector<char>& inside) {
  std::int64_t cut = 0;
  for (auto [u, v] : g.edges()) cut += inside[u] != inside[v];
  return cut;
}

/// Random subset of the given size, or a BFS ball of that size grown from a
/// random vertex, marked in `inside`. `allowed` restricts membership.
void sample_subset(const Graph& g, int size, bool ball, Rng& rng, const std::vector<char>& allowed,
                   std::vector<char>& inside) {
  std::fill(inside.begin(), inside.end(), 0);
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (allowed[v]) pool.push_back(v);
  }
  if (!ball) {
    for (int i = 0; i < size; ++i) {
      const std::size_t j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
      inside[pool[i]] = 1;
    }
    return;
  }
  int taken = 0;
  std::vector<Vertex> queue;
  while (taken < size) {
    Vertex start = pool[rng.below(pool.size())];
    if (inside[start]) continue;
    inside[start] = 1;
    ++taken;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size() && taken < size; ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (taken < size && allowed[w] && !inside[w]) {
          inside[w] = 1;
          ++taken;
          queue.push_back(w);
        }
      }
    }
  }
}

}  // namespace

void ThreePartitionInstance::validate(bool strict) const {
  if (m < 1 || items.size() != static_cast<std::size_t>(3 * m)) {
    throw Error(ErrorKind::BadParameters, "a 3-Partition instance needs exactly 3m items", m);
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i] < 1) {
      throw Error(ErrorKind::BadParameters, "items must be positive", static_cast<std::int64_t>(i));
    }
    if (strict && !(4 * items[i] > T && 2 * items[i] < T)) {
      throw Error(ErrorKind::BadParameters, "item outside (T/4, T/2)", static_cast<std::int64_t>(i));
    }
    sum += items[i];
  }
  if (sum != m * T) {
    throw Error(ErrorKind::BadParameters,
                "items sum to " + std::to_string(sum) + ", expected m*T = " + std::to_string(m * T));
  }
}

void check_witness(const ThreePartitionInstance& tp, const PartitionWitness& witness) {
  if (witness.triplets.size() != static_cast<std::size_t>(tp.m)) {
    throw Error(ErrorKind::InvalidWitness, "witness must have m triplets",
                static_cast<std::int64_t>(witness.triplets.size()));
  }
  std::vector<char> used(tp.items.size(), 0);
  for (std::size_t t = 0; t < witness.triplets.size(); ++t) {
    std::int64_t sum = 0;
    for (int i : witness.triplets[t]) {
      if (i < 0 || i >= static_cast<int>(tp.items.size()) || used[i]) {
        throw Error(ErrorKind::InvalidWitness, "triplet " + std::to_string(t) + " reuses or misses an item",
                    static_cast<std::int64_t>(t));
      }
      used[i] = 1;
      sum += tp.items[i];
    }
    if (sum != tp.T) {
      throw Error(ErrorKind::InvalidWitness,
                  "triplet " + std::to_string(t) + " sums to " + std::to_string(sum),
                  static_cast<std::int64_t>(t));
    }
  }
}

std::optional<PartitionWitness> find_witness(const ThreePartitionInstance& tp) {
  const int count = static_cast<int>(tp.items.size());
  std::vector<char> used(count, 0);
  PartitionWitness w;
  auto search = [&](auto&& self) -> bool {
    int first = 0;
    while (first < count && used[first]) ++first;
    if (first == count) return true;
    used[first] = 1;
    for (int j = first + 1; j < count; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      for (int k = j + 1; k < count; ++k) {
        if (used[k] || tp.items[first] + tp.items[j] + tp.items[k] != tp.T) continue;
        used[k] = 1;
        w.triplets.push_back({first, j, k});
        if (self(self)) return true;
        w.triplets.pop_back();
        used[k] = 0;
      }
      used[j] = 0;
    }
    used[first] = 0;
    return false;
  };
  if (count != 3 * tp.m || !search(search)) return std::nullopt;
  return w;
}

std::string_view family_name(GadgetFamily family) {
  switch (family) {
    case GadgetFamily::Depth2: return "depth2";
    case GadgetFamily::Clique: return "clique";
    case GadgetFamily::Grid: return "grid";
    case GadgetFamily::Expander: return "expander";
    case GadgetFamily::BoundedTree: return "bounded-tree";
  }
  return "unknown";
}

GadgetFamily parse_family(std::string_view name) {
  for (auto f : {GadgetFamily::Depth2, GadgetFamily::Clique, GadgetFamily::Grid,
                 GadgetFamily::Expander, GadgetFamily::BoundedTree}) {
    if (family_name(f) == name) return f;
  }
  throw Error(ErrorKind::UnsupportedFamily, "unknown gadget family '" + std::string(name) + "'");
}

GadgetInstance gen_depth2_tree(const ThreePartitionInstance& tp, std::int64_t C) {
  tp.validate();
  check_scale(C);
  check_size(1 + C * tp.m * tp.T);
  Builder b;
  const Vertex root = b.add("root");
  std::vector<std::vector<Vertex>> components;
  for (std::size_t i = 0; i < tp.items.size(); ++i) {
    std::vector<Vertex> comp;
    const Vertex hub = b.add(tagged("hub", static_cast<std::int64_t>(i)));
    b.join(root, hub);
    comp.push_back(hub);
    for (std::int64_t f = 1; f < C * tp.items[i]; ++f) {
      const Vertex leaf = b.add(tagged("filler", static_cast<std::int64_t>(i)));
      b.join(hub, leaf);
      comp.push_back(leaf);
    }
    components.push_back(std::move(comp));
  }
  GadgetInstance g = finish(b, hub_values(1, C * tp.T, tp.m), GadgetFamily::Depth2, tp, C);
  g.components = std::move(components);
  g.hub = {root};
  return g;
}

GadgetInstance gen_clique(const ThreePartitionInstance& tp, std::int64_t C) {
  tp.validate();
  check_scale(C);
  check_size(1 + C * tp.m * tp.T);
  Builder b;
  const Vertex root = b.add("root");
  std::vector<std::vector<Vertex>> components;
  for (std::size_t i = 0; i < tp.items.size(); ++i) {
    std::vector<Vertex> comp;
    for (std::int64_t f = 0; f < C * tp.items[i]; ++f) {
      const Vertex v = b.add(tagged("clique", static_cast<std::int64_t>(i)));
      for (Vertex u : comp) b.join(u, v);
      comp.push_back(v);
    }
    b.join(root, comp.front());
    components.push_back(std::move(comp));
  }
  GadgetInstance g = finish(b, hub_values(1, C * tp.T, tp.m), GadgetFamily::Clique, tp, C);
  g.components = std::move(components);
  g.hub = {root};
  return g;
}

GadgetInstance gen_grid(const ThreePartitionInstance& tp, std::int64_t C) {
  tp.validate();
  check_scale(C);
  check_size(C * C * tp.m * tp.T + 12 * tp.m);
  Builder b;
  std::vector<Vertex> hub;
  const auto leaves = add_hub_tree(b, 3 * tp.m, hub);
  std::vector<std::vector<Vertex>> components;
  for (std::size_t i = 0; i < tp.items.size(); ++i) {
    const std::int64_t rows = C, cols = C * tp.items[i];
    const Vertex base = b.n;
    std::vector<Vertex> comp;
    for (std::int64_t r = 0; r < rows; ++r) {
      for (std::int64_t c = 0; c < cols; ++c) {
        comp.push_back(b.add("grid(" + std::to_string(i) + "," + std::to_string(r) + "," +
                             std::to_string(c) + ")"));
        const Vertex v = base + static_cast<Vertex>(r * cols + c);
        if (c > 0) b.join(v - 1, v);
        if (r > 0) b.join(v - static_cast<Vertex>(cols), v);
      }
    }
    b.join(leaves[i], base);
    components.push_back(std::move(comp));
  }
  const auto zeros = static_cast<std::int64_t>(hub.size());
  GadgetInstance g = finish(b, hub_values(zeros, C * C * tp.T, tp.m), GadgetFamily::Grid, tp, C);
  g.components = std::move(components);
  g.hub = std::move(hub);
  return g;
}

Graph random_cubic_graph(int n, Rng& rng) {
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorKind::ParityViolation, "a 3-regular graph needs an even n >= 4", n);
  }
  std::vector<Vertex> stubs;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    stubs.clear();
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), 3, v);
    rng.shuffle(stubs);
    std::set<Edge> seen;
    bool simple = true;
    for (std::size_t t = 0; t < stubs.size() && simple; t += 2) {
      Vertex u = stubs[t], v = stubs[t + 1];
      if (u == v || !seen.emplace(std::min(u, v), std::max(u, v)).second) simple = false;
    }
    if (simple) return Graph(n, std::vector<Edge>(seen.begin(), seen.end()));
  }
  throw Error(ErrorKind::ExpansionNotCertified, "configuration model kept producing multigraphs", n);
}

Rational check_cheeger_constant(const Graph& graph, int exhaustive_cap, std::uint64_t samples,
                                std::uint64_t seed) {
  const int n = graph.n();
  if (!graph.is_regular()) throw Error(ErrorKind::NotRegular, "graph is not regular");
  if (n < 2) throw Error(ErrorKind::BadParameters, "need at least two vertices", n);
  Rational best(std::numeric_limits<std::int64_t>::max(), 1);
  if (n <= std::min(exhaustive_cap, 30)) {
    const auto adj = adjacency_masks(graph);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 1; s <= full; ++s) {
      const int size = std::popcount(s);
      if (2 * size > n) continue;
      std::int64_t cut = 0;
      for (std::uint64_t rest = s; rest; rest &= rest - 1) {
        cut += std::popcount(adj[std::countr_zero(rest)] & ~s & full);
      }
      best = std::min(best, Rational(cut, size));
    }
    return best;
  }
  Rng rng(seed);
  std::vector<char> inside(n), allowed(n, 1);
  for (std::uint64_t t = 0; t < samples; ++t) {
    const int size = 1 + static_cast<int>(rng.below(n / 2));
    sample_subset(graph, size, t % 2 == 1, rng, allowed, inside);
    best = std::min(best, Rational(cut_of(graph, inside), size));
  }
  return best;
}

GadgetInstance gen_expander(const ThreePartitionInstance& tp, std::int64_t C, std::uint64_t seed) {
  tp.validate();
  check_scale(C);
  for (std::size_t i = 0; i < tp.items.size(); ++i) {
    const std::int64_t size = C * tp.items[i];
    if (size % 2 != 0 || size < 6) {
      throw Error(ErrorKind::ParityViolation,
                  "C*a_" + std::to_string(i) + " = " + std::to_string(size) +
                      " must be even and at least 6",
                  static_cast<std::int64_t>(i));
    }
  }
  check_size(C * tp.m * tp.T + 12 * tp.m);
  const Rational threshold(1, 100);
  Builder b;
  std::vector<Vertex> hub;
  const auto leaves = add_hub_tree(b, 3 * tp.m, hub);
  std::vector<std::vector<Vertex>> components;
  std::vector<Rational> expansion;
  for (std::size_t i = 0; i < tp.items.size(); ++i) {
    const int size = static_cast<int>(C * tp.items[i]);
    std::optional<Graph> chosen;
    Rational ratio;
    for (int attempt = 0; attempt < 50 && !chosen; ++attempt) {
      Rng rng(mix_seed(seed, i * 64 + attempt));
      Graph candidate = random_cubic_graph(size, rng);
      if (!candidate.is_connected()) continue;
      ratio = check_cheeger_constant(candidate, kDefaultCheegerCap, 20000, rng.next());
      if (ratio >= threshold) chosen = std::move(candidate);
    }
    if (!chosen) {
      throw Error(ErrorKind::ExpansionNotCertified,
                  "no certified expander for item " + std::to_string(i) + " after 50 seeds",
                  static_cast<std::int64_t>(i));
    }
    const Vertex base = b.n;
    std::vector<Vertex> comp;
    for (int v = 0; v < size; ++v) comp.push_back(b.add(tagged("expander", static_cast<std::int64_t>(i))));
    for (auto [u, v] : chosen->edges()) b.join(base + u, base + v);
    b.join(leaves[i], base);
    components.push_back(std::move(comp));
    expansion.push_back(ratio);
  }
  const auto zeros = static_cast<std::int64_t>(hub.size());
  GadgetInstance g = finish(b, hub_values(zeros, C * tp.T, tp.m), GadgetFamily::Expander, tp, C);
  g.components = std::move(components);
  g.hub = std::move(hub);
  g.seed = seed;
  g.expansion = std::move(expansion);
  return g;
}

GridCutReport check_grid_cut_lemma(int r, int c, int exhaustive_cap, std::uint64_t samples,
                                   std::uint64_t seed) {
  if (r < 1 || c < r) throw Error(ErrorKind::BadParameters, "need 1 <= r <= c");
  const int n = r * c;
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      const int v = i * c + j;
      if (j + 1 < c) edges.emplace_back(v, v + 1);
      if (i + 1 < r) edges.emplace_back(v, v + c);
    }
  }
  const Graph grid(n, std::move(edges));
  GridCutReport report;
  report.min_slack = std::numeric_limits<double>::infinity();
  auto record = [&](std::int64_t cut, int size) {
    ++report.subsets_checked;
    const bool holds = cut * cut >= size || 2 * cut >= r;
    if (!holds) ++report.violations;
    const double slack = static_cast<double>(cut) - std::min(std::sqrt(static_cast<double>(size)), r / 2.0);
    report.min_slack = std::min(report.min_slack, slack);
  };
  if (n <= std::min(exhaustive_cap, 30)) {
    report.exhaustive = true;
    const auto adj = adjacency_masks(grid);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 1; s <= full; ++s) {
      const int size = std::popcount(s);
      if (2 * size > n) continue;
      if (2 * size == n && !(s & 1)) continue;
      std::int64_t cut = 0;
      for (std::uint64_t rest = s; rest; rest &= rest - 1) {
        cut += std::popcount(adj[std::countr_zero(rest)] & ~s & full);
      }
      record(cut, size);
    }
    return report;
  }
  Rng rng(seed);
  std::vector<char> inside(n), allowed(n, 1);
  for (std::uint64_t t = 0; t < samples; ++t) {
    const int size = 1 + static_cast<int>(rng.below(n / 2));
    sample_subset(grid, size, t % 2 == 1, rng, allowed, inside);
    record(cut_of(grid, inside), size);
  }
  return report;
}

std::vector<int> flower_petal_sizes(int n, int k) {
  if (n <= 1) return {};
  if (n - 1 < k) return std::vector<int>(n - 1, 1);
  const int d = (n % 2 != k % 2) ? k : k - 1;
  int base = (n - 1) / d;
  if (base % 2 == 0) --base;
  std::vector<int> sizes(d, base);
  const int extra = (n - 1 - d * base) / 2;
  for (int i = 0; i < extra; ++i) sizes[i] += 2;
  return sizes;
}

Flower build_flower(int n, int k) {
  if (n < 1 || k < 3) throw Error(ErrorKind::BadParameters, "flowers need n >= 1 and k >= 3");
  check_size(n);
  Flower f;
  f.n = n;
  f.k = k;
  f.subtree_size.reserve(n);
  f.parent.reserve(n);
  std::vector<Edge> edges;
  Vertex next = 0;
  auto build = [&](auto&& self, int size, Vertex parent) -> Vertex {
    const Vertex v = next++;
    f.subtree_size.push_back(size);
    f.parent.push_back(parent);
    if (parent >= 0) edges.emplace_back(parent, v);
    for (int petal : flower_petal_sizes(size, k)) self(self, petal, v);
    return v;
  };
  build(build, n, -1);
  f.tree = Graph(n, std::move(edges));
  f.pistil = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (f.parent[v] == 0) f.petal_roots.push_back(v);
  }
  return f;
}

FlowerReport check_flower_definition(const Flower& flower) {
  const int n = flower.tree.n();
  const int k = flower.k;
  FlowerReport report;
  // Recompute subtree sizes from the edges rather than trusting the record.
  std::vector<int> size(n, 1);
  std::vector<std::vector<int>> child_sizes(n);
  for (Vertex v = n - 1; v >= 1; --v) size[flower.parent[v]] += size[v];
  for (Vertex v = 1; v < n; ++v) child_sizes[flower.parent[v]].push_back(size[v]);
  for (Vertex v = 0; v < n; ++v) {
    ++report.nodes_checked;
    const auto& petals = child_sizes[v];
    const int s = size[v];
    bool ok = s == flower.subtree_size[v];
    ok = ok && std::accumulate(petals.begin(), petals.end(), 0) == s - 1;  // (a)
    if (s - 1 >= k) {
      const int d = (s % 2 != k % 2) ? k : k - 1;
      ok = ok && static_cast<int>(petals.size()) == d;  // (b)
    }
    for (int p : petals) ok = ok && p % 2 == 1;  // (c)
    if (!petals.empty()) {
      auto [lo, hi] = std::minmax_element(petals.begin(), petals.end());
      ok = ok && *hi - *lo <= 2;  // (d)
    }
    ok = ok && flower.tree.degree(v) <= k + 1;
    if (!ok) ++report.violations;
  }
  return report;
}

EvenCutReport check_flower_even_cut(const Flower& flower, int exhaustive_cap, std::uint64_t samples,
                                    std::uint64_t seed) {
  const Graph& g = flower.tree;
  const int n = g.n();
  EvenCutReport report;
  report.min_cut = std::numeric_limits<std::int64_t>::max();
  auto record = [&](std::int64_t cut) {
    ++report.subsets_checked;
    if (cut < 2) ++report.violations;
    report.min_cut = std::min(report.min_cut, cut);
  };
  if (n - 1 <= std::min(exhaustive_cap, 30)) {
    report.exhaustive = true;
    const auto adj = adjacency_masks(g);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    // Masks over vertices 1..n-1; the pistil is vertex 0.
    for (std::uint64_t s = 2; s <= full; s += 2) {
      if (std::popcount(s) % 2 != 0) continue;
      std::int64_t cut = 0;
      for (std::uint64_t rest = s; rest; rest &= rest - 1) {
        cut += std::popcount(adj[std::countr_zero(rest)] & ~s & full);
      }
      record(cut);
    }
    if (report.subsets_checked == 0) report.min_cut = 0;
    return report;
  }
  Rng rng(seed);
  std::vector<char> inside(n), allowed(n, 1);
  allowed[flower.pistil] = 0;
  for (std::uint64_t t = 0; t < samples; ++t) {
    if (t % 3 == 2) {
      // Unions of whole sub-flowers are the tight cases.
      std::fill(inside.begin(), inside.end(), 0);
      const int picks = 1 + static_cast<int>(rng.below(4));
      for (int p = 0; p < picks; ++p) {
        const Vertex top = 1 + static_cast<Vertex>(rng.below(n - 1));
        for (Vertex v = top; v < top + flower.subtree_size[top]; ++v) inside[v] = 1;
      }
    } else {
      const int size = 2 * (1 + static_cast<int>(rng.below((n - 1) / 2)));
      sample_subset(g, size, t % 3 == 1, rng, allowed, inside);
    }
    int count = 0;
    for (Vertex v = 1; v < n; ++v) count += inside[v];
    if (count % 2 == 1) {
      // Toggle one vertex to restore evenness.
      const Vertex v = 1 + static_cast<Vertex>(rng.below(n - 1));
      inside[v] = !inside[v];
      count += inside[v] ? 1 : -1;
    }
    if (count == 0) continue;
    record(cut_of(g, inside));
  }
  if (report.subsets_checked == 0) report.min_cut = 0;
  return report;
}

BigInt cluster_scale(const ThreePartitionInstance& tp, int j) {
  const BigInt base = BigInt(64) * tp.m * tp.T;
  return boost::multiprecision::pow(base, static_cast<unsigned>(2 * j));
}

std::vector<BigInt> bounded_tree_cluster_values(const ThreePartitionInstance& tp) {
  const int top = 4 * tp.m;
  std::vector<BigInt> values(top + 1);
  values[0] = 0;
  for (int c = 1; c <= top; ++c) values[c] = values[c - 1] + cluster_scale(tp, top + 1 - c);
  return values;
}

BigInt envy_yes_threshold(const ThreePartitionInstance& tp) {
  const int m = tp.m;
  auto length = [&](int j) { return cluster_scale(tp, 4 * m + 1 - j); };
  BigInt total = 0;
  for (int j = 1; j <= 3 * m - 1; ++j) total += BigInt(j + 1) * length(j);
  total += BigInt(3 * m) * length(3 * m);
  for (int j = 1; j <= m; ++j) total += BigInt(3 * m + 3 * j) * length(3 * m + j);
  return total;
}

GadgetInstance gen_bounded_tree_instance(const ThreePartitionInstance& tp,
                                         const BoundedTreeOptions& options) {
  tp.validate();
  if (tp.T % 2 != 0) throw Error(ErrorKind::ParityViolation, "T must be even", tp.T);
  for (std::size_t i = 0; i < tp.items.size(); ++i) {
    if (tp.items[i] % 2 != 0) {
      throw Error(ErrorKind::ParityViolation, "every a_i must be even", static_cast<std::int64_t>(i));
    }
    if (!options.desk_scale && tp.items[i] < 1000) {
      throw Error(ErrorKind::BadParameters,
                  "a_i below 1000 breaks the petal-size estimates; use the desk-scale override",
                  static_cast<std::int64_t>(i));
    }
  }
  check_size(64 * tp.m * tp.T);
  Builder b;
  auto add_flower = [&](int size, int k, std::string_view kind, std::size_t index) {
    const Flower f = build_flower(size, k);
    const Vertex base = b.n;
    std::vector<Vertex> members;
    for (Vertex v = 0; v < f.tree.n(); ++v) {
      const std::string role = std::string(v == 0 ? "pistil(" : "petal(") + std::string(kind) + "," +
                               std::to_string(index) + ")";
      members.push_back(b.add(role));
    }
    for (auto [u, v] : f.tree.edges()) b.join(base + u, base + v);
    return members;
  };
  GadgetInstance g;
  const int T = static_cast<int>(tp.T);
  Vertex previous_medium = -1;
  for (std::size_t i = 0; i < tp.items.size(); ++i) {
    auto medium = add_flower(T, options.small_k, "medium", i);
    if (previous_medium >= 0) b.join(previous_medium, medium.front());
    previous_medium = medium.front();
    auto small = add_flower(static_cast<int>(tp.items[i]), options.small_k, "small", i);
    b.join(medium.front(), small.front());
    std::vector<Vertex> larges;
    for (int copy = 0; copy < 2; ++copy) {
      auto large = add_flower(10 * T, options.large_k, "large", i);
      b.join(small.front(), large.front());
      larges.insert(larges.end(), large.begin(), large.end());
    }
    g.medium.push_back(std::move(medium));
    g.components.push_back(std::move(small));
    g.large.push_back(std::move(larges));
  }
  const auto clusters = bounded_tree_cluster_values(tp);
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(b.n));
  for (int c = 0; c < 4 * tp.m; ++c) values.insert(values.end(), static_cast<std::size_t>(T), clusters[c]);
  values.insert(values.end(), static_cast<std::size_t>(60 * tp.m * T), clusters.back());
  GadgetInstance built = finish(b, HouseValues(std::move(values)), GadgetFamily::BoundedTree, tp, 1);
  built.medium = std::move(g.medium);
  built.components = std::move(g.components);
  built.large = std::move(g.large);
  return built;
}

Allocation yes_allocation(const GadgetInstance& gadget, const PartitionWitness& witness) {
  check_witness(gadget.tp, witness);
  const int n = gadget.instance.n();
  std::vector<BigInt> pattern(n, BigInt(0));
  if (gadget.family == GadgetFamily::BoundedTree) {
    const auto clusters = bounded_tree_cluster_values(gadget.tp);
    const int m = gadget.tp.m;
    for (std::size_t c = 0; c < gadget.medium.size(); ++c) {
      for (Vertex v : gadget.medium[c]) pattern[v] = clusters[c];
    }
    for (std::size_t t = 0; t < witness.triplets.size(); ++t) {
      for (int item : witness.triplets[t]) {
        for (Vertex v : gadget.components[item]) pattern[v] = clusters[3 * m + t];
      }
    }
    for (const auto& larges : gadget.large) {
      for (Vertex v : larges) pattern[v] = clusters.back();
    }
  } else {
    for (std::size_t t = 0; t < witness.triplets.size(); ++t) {
      for (int item : witness.triplets[t]) {
        for (Vertex v : gadget.components[item]) pattern[v] = static_cast<int>(t + 1);
      }
    }
  }
  return allocation_from_values(gadget.instance.houses, pattern);
}

BigInt yes_bound(const GadgetInstance& gadget) {
  if (gadget.family == GadgetFamily::BoundedTree) return envy_yes_threshold(gadget.tp);
  return BigInt(3) * gadget.tp.m * gadget.tp.m;
}

}  // namespace gha

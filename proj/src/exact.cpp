#include "gha/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "gha/error.hpp"

namespace gha {
namespace {

constexpr int kHardSubsetLimit = 30;

void check_cap(int n, int cap, const char* what) {
  if (n > cap || n > kHardSubsetLimit) {
    throw Error(ErrorKind::TooLarge,
                std::string(what) + " is capped at n = " + std::to_string(std::min(cap, kHardSubsetLimit)),
                n);
  }
}

/// True when |E| * spread and every value fit in a signed 64-bit word.
bool fits_in_word(const Instance& instance) {
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max());
  if (instance.n() == 0) return true;
  if (instance.houses[instance.n() - 1] > limit) return false;
  const BigInt worst = BigInt(instance.graph.edge_count() + 1) * instance.houses.spread();
  return worst < limit;
}

template <class Cost>
Cost to_cost(const BigInt& x) {
  if constexpr (std::is_same_v<Cost, BigInt>) {
    return x;
  } else {
    return static_cast<Cost>(x);
  }
}

template <class Cost>
ExactResult run_subset_dp(const Instance& instance) {
  const int n = instance.n();
  const auto adj = adjacency_masks(instance.graph);
  std::vector<Cost> gaps(n > 1 ? n - 1 : 0);
  for (int i = 0; i + 1 < n; ++i) gaps[i] = to_cost<Cost>(instance.houses.gap(i));

  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint16_t> cut(states, 0);
  std::vector<Cost> best(states);
  std::vector<std::uint8_t> parent(states, 0);
  std::uint64_t explored = 0;

  for (std::size_t s = 1; s < states; ++s) {
    const int low = std::countr_zero(s);
    const std::size_t rest = s & (s - 1);
    cut[s] = static_cast<std::uint16_t>(cut[rest] + instance.graph.degree(low) -
                                        2 * std::popcount(adj[low] & rest));
    const int size = std::popcount(s);
    bool have = false;
    Cost value{};
    for (std::size_t bits = s; bits; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      const std::size_t prev = s ^ (std::size_t{1} << v);
      ++explored;
      Cost candidate = best[prev];
      if (size >= 2 && cut[prev] != 0) candidate += Cost(cut[prev]) * gaps[size - 2];
      if (!have || candidate < value) {
        value = std::move(candidate);
        parent[s] = static_cast<std::uint8_t>(v);
        have = true;
      }
    }
    best[s] = std::move(value);
  }

  ExactResult result;
  result.states_explored = explored;
  result.witness.assignment.assign(n, 0);
  std::size_t s = states - 1;
  for (int house = n - 1; house >= 0; --house) {
    const int v = parent[s];
    result.witness.assignment[v] = house;
    s ^= std::size_t{1} << v;
  }
  if constexpr (std::is_same_v<Cost, BigInt>) {
    result.optimal_envy = best[states - 1];
  } else {
    result.optimal_envy = BigInt(best[states - 1]);
  }
  return result;
}

}  // namespace

ExactResult solve_exact_dp(const Instance& instance, int cap) {
  const int n = instance.n();
  check_cap(n, cap, "subset DP");
  if (n == 0) return {};
  if (fits_in_word(instance)) return run_subset_dp<std::uint64_t>(instance);
  return run_subset_dp<BigInt>(instance);
}

ExactResult solve_exact_bruteforce(const Instance& instance, int cap) {
  const int n = instance.n();
  check_cap(n, std::min(cap, 12), "permutation enumeration");
  ExactResult result;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  result.witness.assignment = perm;
  if (n == 0) return result;

  const bool small = fits_in_word(instance);
  std::vector<std::int64_t> word(n, 0);
  if (small) {
    for (int i = 0; i < n; ++i) word[i] = static_cast<std::int64_t>(instance.houses[i]);
  }
  const auto edges = instance.graph.edges();
  bool have = false;
  std::int64_t best_word = 0;
  BigInt best_big;
  std::uint64_t explored = 0;
  do {
    ++explored;
    if (small) {
      std::int64_t total = 0;
      for (auto [u, v] : edges) {
        const std::int64_t d = word[perm[u]] - word[perm[v]];
        total += d < 0 ? -d : d;
      }
      if (!have || total < best_word) {
        best_word = total;
        result.witness.assignment = perm;
        have = true;
      }
    } else {
      Allocation alloc{perm};
      BigInt total = envy(instance, alloc);
      if (!have || total < best_big) {
        best_big = std::move(total);
        result.witness.assignment = perm;
        have = true;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  result.optimal_envy = small ? BigInt(best_word) : best_big;
  result.states_explored = explored;
  return result;
}

namespace {

template <class Cost>
struct PatternSearch {
  const Instance& instance;
  Cost bound;
  const std::function<void(const Allocation&)>& visit;
  std::vector<Cost> level_value;
  std::vector<int> level_first;  // first house index of each level
  std::vector<int> remaining;
  std::vector<int> used;
  std::vector<int> level_of;     // per vertex, -1 when unassigned
  Allocation current;
  std::uint64_t count = 0;

  void descend(int v, const Cost& partial) {
    const int n = instance.n();
    if (v == n) {
      ++count;
      visit(current);
      return;
    }
    for (std::size_t level = 0; level < level_value.size(); ++level) {
      if (remaining[level] == 0) continue;
      Cost next = partial;
      bool ok = true;
      for (Vertex w : instance.graph.neighbors(v)) {
        if (w >= v) break;
        const Cost& a = level_value[level];
        const Cost& b = level_value[level_of[w]];
        next += a < b ? Cost(b - a) : Cost(a - b);
        if (next > bound) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      --remaining[level];
      level_of[v] = static_cast<int>(level);
      current.assignment[v] = level_first[level] + used[level]++;
      descend(v + 1, next);
      --used[level];
      level_of[v] = -1;
      ++remaining[level];
    }
  }
};

template <class Cost>
std::uint64_t run_pattern_search(const Instance& instance, const BigInt& bound,
                                 const std::function<void(const Allocation&)>& visit) {
  PatternSearch<Cost> search{instance, to_cost<Cost>(bound), visit, {}, {}, {}, {}, {}, {}, 0};
  const int n = instance.n();
  for (int i = 0; i < n; ++i) {
    if (i == 0 || instance.houses[i] != instance.houses[i - 1]) {
      search.level_value.push_back(to_cost<Cost>(instance.houses[i]));
      search.level_first.push_back(i);
      search.remaining.push_back(0);
      search.used.push_back(0);
    }
    ++search.remaining.back();
  }
  search.level_of.assign(n, -1);
  search.current.assignment.assign(n, 0);
  search.descend(0, Cost{});
  return search.count;
}

}  // namespace

std::uint64_t enumerate_allocations_within(
    const Instance& instance, const BigInt& bound,
    const std::function<void(const Allocation&)>& visit) {
  if (bound < 0) return 0;
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max() / 4);
  if (fits_in_word(instance) && bound < limit) {
    return run_pattern_search<std::int64_t>(instance, bound, visit);
  }
  return run_pattern_search<BigInt>(instance, bound, visit);
}

std::vector<std::int64_t> tree_min_cut_profile(const Graph& tree) {
  if (!tree.is_tree()) throw Error(ErrorKind::NotATree, "graph is not a tree");
  const int n = tree.n();
  constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max() / 4;

  std::vector<Vertex> order;
  std::vector<Vertex> parent(n, -1);
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

  // inside[v][j]: min edges cut within the subtree of v when exactly j of its
  // vertices are chosen and v itself is chosen; outside[v][j] when it is not.
  std::vector<std::vector<std::int32_t>> inside(n), outside(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    std::vector<std::int32_t> in{kInf, 0};
    std::vector<std::int32_t> out{0, kInf};
    for (Vertex c : tree.neighbors(v)) {
      if (parent[c] != v) continue;
      const auto& cin = inside[c];
      const auto& cout = outside[c];
      const std::size_t size = in.size() + cin.size() - 1;
      std::vector<std::int32_t> next_in(size, kInf), next_out(size, kInf);
      for (std::size_t a = 0; a < in.size(); ++a) {
        for (std::size_t b = 0; b < cin.size(); ++b) {
          const std::int32_t keep_in = std::min(cin[b], cout[b] + 1);
          const std::int32_t keep_out = std::min(cout[b], cin[b] + 1);
          if (in[a] < kInf) next_in[a + b] = std::min(next_in[a + b], in[a] + keep_in);
          if (out[a] < kInf) next_out[a + b] = std::min(next_out[a + b], out[a] + keep_out);
        }
      }
      in = std::move(next_in);
      out = std::move(next_out);
      inside[c].clear();
      inside[c].shrink_to_fit();
      outside[c].clear();
      outside[c].shrink_to_fit();
    }
    inside[v] = std::move(in);
    outside[v] = std::move(out);
  }
  std::vector<std::int64_t> profile(n + 1);
  for (int k = 0; k <= n; ++k) profile[k] = std::min(inside[0][k], outside[0][k]);
  return profile;
}

std::int64_t tree_min_cut_k(const Graph& tree, int k) {
  if (!tree.is_tree()) throw Error(ErrorKind::NotATree, "graph is not a tree");
  if (k < 1 || k > tree.n() - 1) {
    throw Error(ErrorKind::OutOfRange, "k must lie in [1, n-1]", k);
  }
  return tree_min_cut_profile(tree)[k];
}

CutwidthResult cutwidth_exact_small(const Graph& graph, int cap) {
  const int n = graph.n();
  check_cap(n, cap, "exact cutwidth");
  std::vector<Vertex> identity(n);
  for (int v = 0; v < n; ++v) identity[v] = v;
  CutwidthResult result;
  result.layout = Layout::from_order(graph, identity);
  result.width = result.layout.width();
  if (n <= 2) return result;

  const auto adj = adjacency_masks(graph);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // Smallest partial width with which each prefix set has been reached.
  std::vector<std::int32_t> reached(std::size_t{1} << n, std::numeric_limits<std::int32_t>::max());
  std::vector<Vertex> prefix;
  std::vector<Vertex> best_order = identity;
  std::int64_t best = result.width;

  auto search = [&](auto&& self, std::uint64_t set, std::int64_t cut, std::int64_t width) -> void {
    if (set == full) {
      if (width < best) {
        best = width;
        best_order = prefix;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (set >> v & 1) continue;
      const std::uint64_t next = set | (std::uint64_t{1} << v);
      const std::int64_t next_cut = cut + graph.degree(v) - 2 * std::popcount(adj[v] & set);
      const std::int64_t next_width = next == full ? width : std::max(width, next_cut);
      if (next_width >= best) continue;
      if (reached[next] <= next_width) continue;
      reached[next] = static_cast<std::int32_t>(next_width);
      prefix.push_back(v);
      self(self, next, next_cut, next_width);
      prefix.pop_back();
    }
  };
  search(search, 0, 0, 0);
  result.layout = Layout::from_order(graph, best_order);
  result.width = result.layout.width();
  return result;
}

}  // namespace gha

#include <set>

#include "doctest.h"
#include "gha/error.hpp"
#include "gha/exact.hpp"
#include "support.hpp"

using namespace gha;
using namespace gha::test;

namespace {

// Width of every ordering, for small graphs.
std::int64_t naive_cutwidth(const Graph& g) {
  std::vector<Vertex> order(g.n());
  for (int v = 0; v < g.n(); ++v) order[v] = v;
  std::int64_t best = -1;
  do {
    std::int64_t w = Layout::from_order(g, order).width();
    if (best < 0 || w < best) best = w;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace

TEST_CASE("subset DP on small named instances") {
  Instance p3 = make_instance(families::path(3), {0, 1, 5});
  CHECK(naive_optimum(p3) == 5);
  ExactResult r = solve_exact_dp(p3);
  CHECK(r.optimal_envy == 5);
  CHECK(envy(p3, r.witness) == 5);

  Instance star = make_instance(families::star(3), {0, 1, 2, 10});
  CHECK(naive_optimum(star) == 11);
  CHECK(solve_exact_dp(star).optimal_envy == 11);
}

TEST_CASE("brute force on small named instances") {
  CHECK(solve_exact_bruteforce(make_instance(families::path(1), {4})).optimal_envy == 0);
  Instance c4 = make_instance(families::cycle(4), {0, 1, 2, 3});
  // Any cycle pays at least twice the spread, and the sorted order attains it.
  CHECK(naive_optimum(c4) == 6);
  ExactResult r = solve_exact_bruteforce(c4);
  CHECK(r.optimal_envy == 6);
  CHECK(r.witness.assignment == std::vector<int>{0, 1, 2, 3});
  CHECK(r.states_explored == 24);
}

TEST_CASE("DP and brute force agree on random instances") {
  Rng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(9));
    Graph g = trial % 3 == 0 ? families::random_tree(n, rng) : random_graph(n, 0.45, rng);
    Instance inst(g, random_values(n, trial % 2 ? 5 : 1000, rng));
    ExactResult dp = solve_exact_dp(inst);
    ExactResult bf = solve_exact_bruteforce(inst);
    REQUIRE(dp.optimal_envy == bf.optimal_envy);
    CHECK(envy(inst, dp.witness) == dp.optimal_envy);
    CHECK(envy(inst, bf.witness) == bf.optimal_envy);
  }
}

TEST_CASE("brute force returns the lexicographically first optimum") {
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(5));
    Instance inst(random_graph(n, 0.5, rng), random_values(n, 4, rng));
    ExactResult bf = solve_exact_bruteforce(inst);
    Allocation a;
    for (int i = 0; i < n; ++i) a.assignment.push_back(i);
    do {
      if (naive_envy(inst, a) == bf.optimal_envy) break;
    } while (std::next_permutation(a.assignment.begin(), a.assignment.end()));
    CHECK(a == bf.witness);
  }
}

TEST_CASE("DP optimum is invariant under relabeling and shifting") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(10));
    Graph g = random_graph(n, 0.4, rng);
    HouseValues h = random_values(n, 50, rng);
    BigInt base = solve_exact_dp(Instance(g, h)).optimal_envy;

    std::vector<int> relabel(n);
    for (int v = 0; v < n; ++v) relabel[v] = v;
    rng.shuffle(relabel);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(relabel[u], relabel[v]);
    CHECK(solve_exact_dp(Instance(Graph(n, edges), h)).optimal_envy == base);

    std::vector<BigInt> shifted(h.values().begin(), h.values().end());
    for (auto& x : shifted) x += BigInt(1) << 100;
    CHECK(solve_exact_dp(Instance(g, HouseValues(shifted))).optimal_envy == base);
  }
}

TEST_CASE("DP handles values past 64 bits") {
  BigInt s = BigInt(1) << 90;
  Instance inst(families::star(3), HouseValues({BigInt(0), s, 2 * s, 10 * s}));
  CHECK(solve_exact_dp(inst).optimal_envy == 11 * s);
}

TEST_CASE("DP caps") {
  Instance big_path = make_instance(families::path(23), std::vector<long long>(23, 0));
  CHECK_THROWS_AS(solve_exact_dp(big_path), Error);
  CHECK(solve_exact_dp(big_path, 23).optimal_envy == 0);
  Instance eleven = make_instance(families::path(11), std::vector<long long>(11, 0));
  CHECK_THROWS_AS(solve_exact_bruteforce(eleven), Error);
}

TEST_CASE("B_3 counterexample: optimum 5 and no optimal global median witness") {
  Instance inst = b3ref_instance();
  ExactResult r = solve_exact_dp(inst);
  CHECK(r.optimal_envy == 5);
  CHECK(envy(inst, r.witness) == 5);

  std::set<std::vector<BigInt>> patterns;
  std::uint64_t count = enumerate_allocations_within(inst, 5, [&](const Allocation& a) {
    CHECK(envy(inst, a) <= 5);
    patterns.insert(pattern_of(inst, a));
  });
  CHECK(count == patterns.size());
  CHECK(patterns.count(b3ref_bottom_pattern()) == 1);
  CHECK(enumerate_allocations_within(inst, 4, [](const Allocation&) {}) == 0);
  CHECK(enumerate_allocations_within(inst, 6, [](const Allocation&) {}) > count);
}

TEST_CASE("pattern enumeration matches exhaustive counting") {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(6));
    Instance inst(random_graph(n, 0.5, rng), random_values(n, 3, rng));
    BigInt bound = solve_exact_dp(inst).optimal_envy + rng.below(3);
    std::set<std::vector<BigInt>> expected;
    Allocation a;
    for (int i = 0; i < n; ++i) a.assignment.push_back(i);
    do {
      if (naive_envy(inst, a) <= bound) expected.insert(pattern_of(inst, a));
    } while (std::next_permutation(a.assignment.begin(), a.assignment.end()));
    std::set<std::vector<BigInt>> seen;
    enumerate_allocations_within(inst, bound,
                                 [&](const Allocation& x) { seen.insert(pattern_of(inst, x)); });
    CHECK(seen == expected);
  }
}

TEST_CASE("tree min cut DP") {
  Graph b5 = families::complete_binary_tree(5);
  CHECK(tree_min_cut_k(b5, 5) == 3);
  CHECK(tree_min_cut_k(b5, 31) == 1);
  CHECK_THROWS_AS(tree_min_cut_k(families::cycle(5), 2), Error);
  CHECK_THROWS_AS(tree_min_cut_k(b5, 0), Error);

  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(15));
    Graph t = families::random_tree(n, rng);
    auto profile = tree_min_cut_profile(t);
    CHECK(profile[0] == 0);
    CHECK(profile[n] == 0);
    for (int k = 1; k < n; ++k) {
      CHECK(profile[k] == min_cut_k_bruteforce(t, k).cut);
      CHECK(profile[k] == profile[n - k]);
    }
  }
}

TEST_CASE("tree min cut is 1 exactly at subtree sizes") {
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(60));
    Graph t = families::random_tree(n, rng);
    std::set<int> sizes;
    // Subtree sizes under every edge: remove the edge and measure one side.
    for (auto [u, v] : t.edges()) {
      std::vector<char> seen(n, 0);
      std::vector<Vertex> stack{v};
      seen[v] = seen[u] = 1;
      int size = 0;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        ++size;
        for (Vertex w : t.neighbors(x)) {
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
      sizes.insert(size);
      sizes.insert(n - size);
    }
    auto profile = tree_min_cut_profile(t);
    for (int k = 1; k < n; ++k) CHECK((profile[k] == 1) == (sizes.count(k) == 1));
  }
}

TEST_CASE("exact cutwidth") {
  CHECK(cutwidth_exact_small(families::path(7)).width == 1);
  CHECK(naive_cutwidth(families::complete(4)) == 4);
  CHECK(cutwidth_exact_small(families::complete(4)).width == 4);
  Graph g23 = families::grid(2, 3);
  CutwidthResult r = cutwidth_exact_small(g23);
  CHECK(r.width == naive_cutwidth(g23));
  CHECK(Layout::from_order(g23, r.layout.order()).width() == r.width);
  CHECK_THROWS_AS(cutwidth_exact_small(families::path(13)), Error);

  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    Graph g = random_graph(n, 0.5, rng);
    CHECK(cutwidth_exact_small(g).width == naive_cutwidth(g));
  }
}

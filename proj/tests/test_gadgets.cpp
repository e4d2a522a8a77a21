#include <cmath>

#include "doctest.h"
#include "gha/error.hpp"
#include "gha/exact.hpp"
#include "gha/gadgets.hpp"
#include "support.hpp"

using namespace gha;
using namespace gha::test;

namespace {

ThreePartitionInstance tp_of(std::vector<std::int64_t> items, int m, std::int64_t T) {
  ThreePartitionInstance tp;
  tp.items = std::move(items);
  tp.m = m;
  tp.T = T;
  return tp;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

std::int64_t count_value(const HouseValues& h, long long x) {
  std::int64_t c = 0;
  for (const auto& v : h.values()) c += v == x;
  return c;
}

// Independent cut: direct edge scan over a membership mask.
std::int64_t mask_cut(const Graph& g, std::uint64_t mask) {
  std::int64_t cut = 0;
  for (auto [u, v] : g.edges()) cut += ((mask >> u) & 1) != ((mask >> v) & 1);
  return cut;
}

}  // namespace

TEST_CASE("3-Partition validation and witnesses") {
  auto tp = tp_of({1, 1, 2}, 1, 4);
  CHECK_NOTHROW(tp.validate());
  CHECK(kind_of([&] { tp_of({1, 1, 1}, 1, 4).validate(); }) == ErrorKind::BadParameters);
  CHECK(kind_of([&] { tp_of({1, 1, 2}, 1, 4).validate(true); }) == ErrorKind::BadParameters);

  auto w = find_witness(tp);
  REQUIRE(w);
  CHECK_NOTHROW(check_witness(tp, *w));
  PartitionWitness bad{{{0, 0, 2}}};
  CHECK(kind_of([&] { check_witness(tp, bad); }) == ErrorKind::InvalidWitness);

  auto six = tp_of({1, 2, 3, 1, 1, 4}, 2, 6);
  auto w6 = find_witness(six);
  REQUIRE(w6);
  CHECK_NOTHROW(check_witness(six, *w6));
  PartitionWitness wrong_sum{{{0, 1, 3}, {2, 4, 5}}};
  CHECK(kind_of([&] { check_witness(six, wrong_sum); }) == ErrorKind::InvalidWitness);
  CHECK_FALSE(find_witness(tp_of({1, 1, 1, 1, 1, 3}, 2, 4)));
}

TEST_CASE("family names round-trip") {
  for (auto f : {GadgetFamily::Depth2, GadgetFamily::Clique, GadgetFamily::Grid, GadgetFamily::Expander,
                 GadgetFamily::BoundedTree}) {
    CHECK(parse_family(family_name(f)) == f);
  }
  CHECK(kind_of([] { parse_family("torus"); }) == ErrorKind::UnsupportedFamily);
}

TEST_CASE("depth-2 tree on a one-triplet instance") {
  auto tp = tp_of({1, 1, 2}, 1, 4);
  GadgetInstance g = gen_depth2_tree(tp, 2);
  CHECK(g.instance.n() == 9);
  CHECK(g.instance.graph.is_tree());
  CHECK(count_value(g.instance.houses, 1) == 8);
  CHECK(count_value(g.instance.houses, 0) == 1);
  CHECK(g.roles[0] == "root");
  CHECK(g.instance.graph.degree(0) == 3);

  Allocation yes = yes_allocation(g, *find_witness(tp));
  CHECK(envy(g.instance, yes) <= yes_bound(g));
  CHECK(yes_bound(g) == 3);

  // With one 0 and eight 1s, envy is the degree of whoever gets the 0.
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    const Vertex hub = g.components[i].front();
    CHECK(g.roles[hub].rfind("hub", 0) == 0);
    CHECK(g.instance.graph.degree(hub) >= 2);
  }
  BigInt opt = solve_exact_bruteforce(g.instance, 9).optimal_envy;
  CHECK(opt == naive_optimum(g.instance));
  CHECK(opt == 1);
}

TEST_CASE("YES allocations of every hub family stay under 3m^2") {
  auto tp = tp_of({1, 2, 3, 1, 1, 4}, 2, 6);
  auto w = *find_witness(tp);
  for (std::int64_t C : {1, 2, 3}) {
    for (GadgetInstance g : {gen_depth2_tree(tp, C), gen_clique(tp, C), gen_grid(tp, C)}) {
      Allocation a = yes_allocation(g, w);
      CHECK(envy(g.instance, a) == naive_envy(g.instance, a));
      CHECK(envy(g.instance, a) <= yes_bound(g));
      CHECK(g.instance.graph.is_connected());
      CHECK(static_cast<std::int64_t>(g.roles.size()) == g.instance.n());
    }
  }
}

TEST_CASE("clique and grid shapes") {
  auto tp = tp_of({1, 1, 2}, 1, 4);
  GadgetInstance k = gen_clique(tp, 3);
  CHECK(k.instance.n() == 13);
  for (std::size_t i = 0; i < 3; ++i) {
    const int size = static_cast<int>(k.components[i].size());
    CHECK(size == 3 * tp.items[i]);
    for (Vertex v : k.components[i]) CHECK(k.instance.graph.degree(v) >= size - 1);
  }
  CHECK(k.instance.graph.edge_count() == 3 + 3 + 3 + 15);

  GadgetInstance grid = gen_grid(tp, 2);
  // B_2 has 7 vertices, then 2x2 + 2x2 + 2x4 grid vertices.
  CHECK(grid.instance.n() == 7 + 16);
  CHECK(grid.instance.graph.max_degree() <= 5);
  CHECK(grid.hub.size() == 7);
  CHECK(count_value(grid.instance.houses, 0) == 7);
  CHECK(grid.roles[7] == "grid(0,0,0)");
}

TEST_CASE("grid cut lemma") {
  GridCutReport r23 = check_grid_cut_lemma(2, 3);
  CHECK(r23.exhaustive);
  // 6 + 15 singletons and pairs, plus the 10 half-size sets containing vertex 0.
  CHECK(r23.subsets_checked == 31);
  CHECK(r23.violations == 0);
  for (int r = 1; r <= 4; ++r) {
    for (int c = r; r * c <= 18; ++c) {
      GridCutReport rep = check_grid_cut_lemma(r, c);
      CHECK(rep.exhaustive);
      CHECK(rep.violations == 0);
      CHECK(rep.min_slack >= 0);
    }
  }
  GridCutReport big = check_grid_cut_lemma(4, 5, 18, 20000, 3);
  CHECK_FALSE(big.exhaustive);
  CHECK(big.violations == 0);
  CHECK(kind_of([] { check_grid_cut_lemma(3, 2); }) == ErrorKind::BadParameters);
}

TEST_CASE("Cheeger constants") {
  CHECK(check_cheeger_constant(families::complete(4)) == Rational(2));
  CHECK(check_cheeger_constant(families::cycle(6)) == Rational(2, 3));
  CHECK(kind_of([] { check_cheeger_constant(families::path(4)); }) == ErrorKind::NotRegular);

  Rng rng(8);
  Graph cubic = random_cubic_graph(16, rng);
  CHECK(cubic.is_regular());
  CHECK(cubic.max_degree() == 3);
  const Rational h = check_cheeger_constant(cubic);
  MESSAGE("random cubic n=16 expansion: " << boost::rational_cast<double>(h));
  if (cubic.is_connected()) CHECK(h >= Rational(1, 100));

  // Exhaustive answer agrees with a direct scan.
  Rational best(100);
  for (std::uint64_t s = 1; s < (1u << 16); ++s) {
    const int size = std::popcount(s);
    if (2 * size > 16) continue;
    best = std::min(best, Rational(mask_cut(cubic, s), size));
  }
  CHECK(best == h);
  CHECK(kind_of([&] { random_cubic_graph(7, rng); }) == ErrorKind::ParityViolation);
}

TEST_CASE("expander gadget") {
  auto tp = tp_of({2, 2, 2}, 1, 6);
  GadgetInstance g = gen_expander(tp, 4, 11);
  for (const auto& comp : g.components) CHECK(comp.size() == 8);
  CHECK(g.instance.graph.max_degree() <= 4);
  CHECK(g.instance.graph.is_connected());
  REQUIRE(g.expansion.size() == 3);
  for (const auto& x : g.expansion) CHECK(x >= Rational(1, 100));
  CHECK(envy(g.instance, yes_allocation(g, *find_witness(tp))) <= yes_bound(g));
  CHECK(gen_expander(tp, 4, 11).instance == g.instance);
  CHECK(kind_of([&] { gen_expander(tp, 1, 11); }) == ErrorKind::ParityViolation);
  CHECK(kind_of([&] { gen_expander(tp_of({1, 1, 2}, 1, 4), 3, 1); }) == ErrorKind::ParityViolation);
}

TEST_CASE("flower construction") {
  Flower one = build_flower(1, 5);
  CHECK(one.tree.n() == 1);
  CHECK(one.petal_roots.empty());

  CHECK(flower_petal_sizes(10, 3) == std::vector<int>{3, 3, 3});
  CHECK(flower_petal_sizes(3, 5) == std::vector<int>{1, 1});
  Flower ten = build_flower(10, 3);
  CHECK(ten.tree.is_tree());
  CHECK(ten.petal_roots.size() == 3);
  CHECK(check_flower_definition(ten).violations == 0);

  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 3 + static_cast<int>(rng.below(20));
    const int n = 1 + static_cast<int>(rng.below(3000));
    Flower f = build_flower(n, k);
    REQUIRE(f.tree.n() == n);
    CHECK(f.tree.is_tree());
    CHECK(check_flower_definition(f).violations == 0);
    for (Vertex v = 1; v < n; ++v) CHECK(f.subtree_size[v] % 2 == 1);
    if (n >= 10 * k && n % 2 != k % 2) {
      for (Vertex p : f.petal_roots) {
        const int size = f.subtree_size[p];
        CHECK(5 * k * size >= 4 * n);
        CHECK(5 * k * size <= 6 * n);
      }
    }
  }
  CHECK(kind_of([] { build_flower(5, 2); }) == ErrorKind::BadParameters);
}

TEST_CASE("even sets in a flower cut at least two edges") {
  Flower ten = build_flower(10, 3);
  EvenCutReport r = check_flower_even_cut(ten);
  CHECK(r.exhaustive);
  CHECK(r.violations == 0);
  CHECK(r.min_cut == 2);
  CHECK(r.subsets_checked == (1u << 8) - 1);

  // Oracle: direct scan of even subsets of the non-pistil vertices.
  std::int64_t min_cut = 100;
  for (std::uint64_t s = 1; s < (1u << 9); ++s) {
    if (std::popcount(s) % 2) continue;
    min_cut = std::min(min_cut, mask_cut(ten.tree, s << 1));
  }
  CHECK(min_cut == r.min_cut);

  EvenCutReport sampled = check_flower_even_cut(build_flower(40, 3), 20, 20000, 5);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.violations == 0);
  CHECK(sampled.min_cut >= 2);
}

TEST_CASE("bounded-degree tree at desk scale") {
  auto tp = tp_of({2, 2, 2}, 1, 6);
  CHECK(kind_of([&] { gen_bounded_tree_instance(tp); }) == ErrorKind::BadParameters);
  CHECK(kind_of([&] { gen_bounded_tree_instance(tp_of({1, 2, 3}, 1, 6), {3, 3, true}); }) ==
        ErrorKind::ParityViolation);

  GadgetInstance g = gen_bounded_tree_instance(tp, {3, 5, true});
  CHECK(g.instance.n() == 64 * tp.m * tp.T);
  CHECK(g.instance.n() == 384);
  CHECK(g.instance.graph.is_tree());
  CHECK(g.instance.graph.max_degree() <= 5 + 3);

  Allocation yes = yes_allocation(g, *find_witness(tp));
  CHECK(envy(g.instance, yes) == envy_yes_threshold(tp));
  CHECK(naive_envy(g.instance, yes) == yes_bound(g));

  // Each scale dominates |E| times everything below it.
  const BigInt edges = static_cast<std::int64_t>(g.instance.graph.edge_count());
  for (int j = 2; j <= 4 * tp.m; ++j) {
    BigInt below = 0;
    for (int t = 1; t < j; ++t) below += cluster_scale(tp, t);
    CHECK(cluster_scale(tp, j) > edges * below);
  }
  // Values need O(m log(mT)) bits.
  const auto clusters = bounded_tree_cluster_values(tp);
  const double bits_per = std::log2(64.0 * tp.m * tp.T);
  CHECK(static_cast<double>(bit_length(clusters.back())) <= 2 * 4 * tp.m * bits_per + 2);
  CHECK(clusters.size() == static_cast<std::size_t>(4 * tp.m + 1));
}

TEST_CASE("bounded-degree tree with two triplets") {
  auto tp = tp_of({4, 4, 4, 2, 4, 6}, 2, 12);
  GadgetInstance g = gen_bounded_tree_instance(tp, {3, 5, true});
  CHECK(g.instance.n() == 64 * 2 * 12);
  auto w = find_witness(tp);
  REQUIRE(w);
  CHECK(envy(g.instance, yes_allocation(g, *w)) == envy_yes_threshold(tp));
  PartitionWitness bad{{{0, 1, 3}, {2, 4, 5}}};
  CHECK(kind_of([&] { yes_allocation(g, bad); }) == ErrorKind::InvalidWitness);
}

TEST_CASE("NO instance probe") {
  // No triplet can hold the 3, so the instance has no witness.
  auto tp = tp_of({1, 1, 1, 1, 1, 3}, 2, 4);
  REQUIRE_FALSE(find_witness(tp));
  const std::int64_t C = 2;
  GadgetInstance d = gen_depth2_tree(tp, C);
  GadgetInstance k = gen_clique(tp, C);
  REQUIRE(d.instance.n() == 17);
  const BigInt opt_d = solve_exact_dp(d.instance).optimal_envy;
  const BigInt opt_k = solve_exact_dp(k.instance).optimal_envy;
  MESSAGE("depth-2 NO optimum " << opt_d << ", clique NO optimum " << opt_k << ", 3m^2 = " << yes_bound(d));
  CHECK(opt_d >= C);
  CHECK(opt_k >= C * C / 4);
}

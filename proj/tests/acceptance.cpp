// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "gha/approx.hpp"
#include "gha/exact.hpp"
#include "gha/families.hpp"
#include "gha/gadgets.hpp"
#include "gha/random_graphs.hpp"
#include "gha/repunit.hpp"
#include "support.hpp"

using namespace gha;
using namespace gha::test;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail << "first failure: " << what << "; ";
    passed = passed && ok;
  }
};

std::int64_t envy_small(const Graph& g, const std::vector<std::int64_t>& h, const std::vector<int>& a) {
  std::int64_t total = 0;
  for (auto [u, v] : g.edges()) total += std::abs(h[a[u]] - h[a[v]]);
  return total;
}

void criterion1(Outcome& o) {
  const Instance inst = b3ref_instance();
  const ExactResult r = solve_exact_dp(inst);
  const BigInt median = naive_envy(inst, allocation_from_values(inst.houses, b3ref_top_pattern()));
  const BigInt bottom = naive_envy(inst, allocation_from_values(inst.houses, b3ref_bottom_pattern()));
  o.require(r.optimal_envy == 5, "DP optimum 5");
  o.require(naive_envy(inst, r.witness) == 5, "DP witness evaluates to 5");
  o.require(median == 6, "global-median allocation evaluates to 6");
  o.require(bottom == 5, "bottom allocation evaluates to 5");
  o.require(has_global_median_property(3, inst, allocation_from_values(inst.houses, b3ref_top_pattern())),
            "top allocation has the global median property");
  std::uint64_t with_median = 0;
  const std::uint64_t optima = enumerate_allocations_within(inst, 5, [&](const Allocation& a) {
    with_median += has_global_median_property(3, inst, a);
  });
  o.require(optima > 0 && with_median == 0, "no optimal witness has the global median property");
  o.detail << "optimum " << r.optimal_envy << ", median allocation " << median << ", " << optima
           << " optimal value patterns, " << with_median << " with the median property";
}

void criterion2(Outcome& o) {
  const std::vector<int> expected{1, 2, 1, 2, 3, 2, 1, 2, 3, 2, 3, 2, 3, 2, 1, 2, 3, 2, 3, 4};
  for (int m = 1; m <= 20; ++m) {
    const EleganceRecord r = elegance(m);
    o.require(r.elegance == expected[m - 1], "elegance(" + std::to_string(m) + ")");
    o.require(r.witness.value() == m, "witness for " + std::to_string(m));
  }
  o.detail << "elegance(1..20) matches the table";
}

void criterion3(Outcome& o) {
  auto values = elegance_values(1 << 10);
  std::uint64_t checked = 0;
  for (int k = 1; k <= 10; ++k) {
    const auto profile = tree_min_cut_profile(families::complete_binary_tree(k));
    for (int i = 1; i <= (1 << k) - 1; ++i) {
      const int el = (*values)[i];
      o.require(el - 1 <= profile[i] && profile[i] <= el,
                "k=" + std::to_string(k) + " i=" + std::to_string(i));
      ++checked;
    }
  }
  o.detail << checked << " (k, i) pairs";
}

void criterion4(Outcome& o) {
  std::uint64_t checked = 0;
  int worst_num = 0, worst_den = 1;
  for (int k = 1; k <= 10; ++k) {
    const int n = (1 << (k + 1)) - 1;
    const auto profile = tree_min_cut_profile(families::complete_binary_tree(k));
    for (int i = 1; i < n; ++i) {
      std::vector<long long> raw(n, 1);
      std::fill(raw.begin(), raw.begin() + i, 0);
      const HouseValues h = values_of(raw);
      const ApproxResult r = inorder_allocation(k, h);
      const int side = std::min(i, n - i);
      o.require(r.certificate.achieved_envy == runs(side), "in-order envy == runs at k=" + std::to_string(k));
      // Two-valued instances: envy is the cut between the 0s and 1s.
      o.require(2 * runs(side) <= 7 * profile[i], "runs <= 3.5 delta at k=" + std::to_string(k) +
                                                      " i=" + std::to_string(i));
      if (static_cast<long long>(runs(side)) * worst_den > static_cast<long long>(worst_num) * profile[i]) {
        worst_num = runs(side);
        worst_den = static_cast<int>(profile[i]);
      }
      ++checked;
    }
  }
  auto values = elegance_values(1 << 20);
  std::uint64_t bad = 0;
  for (std::int64_t i = 1; i <= (1 << 20); ++i) bad += runs(i) > 3 * (*values)[i] - 2;
  o.require(bad == 0, "runs <= 3 elegance - 2 up to 2^20");
  o.detail << checked << " two-valued instances, worst runs/delta " << worst_num << "/" << worst_den
           << ", " << bad << " run-bound violations up to 2^20";
}

void criterion5(Outcome& o) {
  const auto profile = tree_min_cut_profile(families::complete_binary_tree(7));
  auto [h89, h94] = value_agnostic_gap_instances(7);
  const BigInt a = inorder_allocation(7, h89.houses).certificate.achieved_envy;
  const BigInt b = inorder_allocation(7, h94.houses).certificate.achieved_envy;
  o.require(profile[89] == 3 && profile[94] == 2, "optima 3 and 2");
  o.require(a == 5 && b == 4, "in-order 5 and 4");
  o.detail << "optima " << profile[89] << "/" << profile[94] << ", in-order " << a << "/" << b << ", ratios "
           << a << "/" << profile[89] << " and " << b << "/" << profile[94];
}

void criterion6(Outcome& o) {
  Rng rng(2024);
  double worst = 0;
  for (int t = 0; t < 240; ++t) {
    const int n = 2 + static_cast<int>(rng.below(17));
    Graph tree = families::random_tree(n, rng);
    HouseValues h = random_values(n, t % 2 ? 5 : 1000000, rng);
    const ApproxResult r = trickle_down(tree, h);
    const BigInt opt = solve_exact_dp(Instance(tree, h)).optimal_envy;
    o.require(naive_envy(Instance(tree, h), r.allocation) == r.certificate.achieved_envy, "achieved envy");
    if (opt == 0) {
      o.require(r.certificate.achieved_envy == 0, "zero optimum");
      continue;
    }
    const double ratio = static_cast<double>(r.certificate.achieved_envy) / static_cast<double>(opt);
    worst = std::max(worst, ratio / (tree.max_degree() * std::log2(n)));
    o.require(ratio <= tree.max_degree() * std::log2(n) + 1e-9, "ratio <= Delta log2 n");
  }
  int large = 0;
  for (int n : {1000, 10000, 50000, 100000}) {
    for (int rep = 0; rep < 3; ++rep) {
      Graph tree = families::random_tree(n, rng);
      HouseValues h = random_values(n, 1000000000, rng);
      const ApproxResult r = trickle_down(tree, h);
      int log_ceil = 0;
      while ((1 << log_ceil) < n) ++log_ceil;
      o.require(r.certificate.guarantee_bound == h.spread() * tree.max_degree() * log_ceil, "certificate formula");
      o.require(r.certificate.achieved_envy <= r.certificate.guarantee_bound, "certificate at n=" + std::to_string(n));
      ++large;
    }
  }
  o.detail << "240 small trees, worst ratio / (Delta log2 n) " << worst << "; " << large
           << " trees up to 1e5 within the certificate";
}

void criterion7(Outcome& o) {
  Rng rng(77);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng.below(60));
    Graph g = families::random_connected(n, rng.unit() * 0.3, rng);
    Instance inst(g, random_values(n, 1000000, rng));
    std::vector<Vertex> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    rng.shuffle(order);
    // Width from a direct prefix scan.
    std::int64_t width = 0;
    std::vector<Vertex> prefix;
    for (int i = 0; i + 1 < n; ++i) {
      prefix.push_back(order[i]);
      width = std::max(width, cut_size(g, prefix));
    }
    const ApproxResult r = layout_allocation(inst, Layout::from_order(g, order));
    o.require(naive_envy(inst, r.allocation) <= inst.houses.spread() * width, "envy <= width * spread");
  }
  o.detail << "1000 (graph, layout) pairs";
}

void criterion8(Outcome& o) {
  Rng rng(88);
  double worst = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + static_cast<int>(rng.below(8));
    Graph g = families::random_connected(n, rng.unit() * 0.5, rng);
    std::vector<std::int64_t> h(n);
    for (auto& x : h) x = static_cast<std::int64_t>(rng.below(50));
    std::sort(h.begin(), h.end());
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i) a[i] = i;
    std::int64_t lo = std::numeric_limits<std::int64_t>::max(), hi = 0;
    do {
      const std::int64_t e = envy_small(g, h, a);
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    } while (std::next_permutation(a.begin(), a.end()));
    const auto edges = static_cast<std::int64_t>(g.edge_count());
    if (lo == 0) {
      o.require(hi == 0, "zero optimum forces zero maximum");
      continue;
    }
    o.require(hi <= edges * lo, "max / min <= |E|");
    worst = std::max(worst, static_cast<double>(hi) / (static_cast<double>(lo) * edges));
  }
  o.detail << "500 instances, worst (max/min)/|E| " << worst;
}

void criterion9(Outcome& o) {
  std::uint64_t grids = 0, subsets = 0;
  for (int r = 1; r <= 18; ++r) {
    for (int c = r; r * c <= 18; ++c) {
      const GridCutReport rep = check_grid_cut_lemma(r, c);
      o.require(rep.exhaustive && rep.violations == 0, "grid " + std::to_string(r) + "x" + std::to_string(c));
      subsets += rep.subsets_checked;
      ++grids;
    }
  }
  Rng rng(99);
  int flowers = 0;
  while (flowers < 200) {
    const int k = 3 + static_cast<int>(rng.below(30));
    const int n = 10 * k + static_cast<int>(rng.below(4000));
    if (n % 2 == k % 2) continue;
    const Flower f = build_flower(n, k);
    o.require(check_flower_definition(f).violations == 0, "flower conditions");
    o.require(f.petal_roots.size() == static_cast<std::size_t>(k), "k petals");
    for (Vertex p : f.petal_roots) {
      const std::int64_t s = f.subtree_size[p];
      o.require(5 * k * s >= 4 * n && 5 * k * s <= 6 * n, "petal size bounds");
    }
    ++flowers;
  }
  ThreePartitionInstance tp{{2, 2, 2}, 1, 6};
  BoundedTreeOptions desk;
  desk.desk_scale = true;
  const GadgetInstance g = gen_bounded_tree_instance(tp, desk);
  const BigInt e = naive_envy(g.instance, yes_allocation(g, *find_witness(tp)));
  o.require(g.instance.n() == 384, "64mT vertices");
  o.require(e == envy_yes_threshold(tp), "YES envy equals the threshold");
  o.detail << grids << " grids (" << subsets << " subsets), " << flowers << " flowers, bounded-tree envy "
           << bit_length(e) << "-bit value matches";
}

void criterion10(Outcome& o) {
  const SoftGateResult gate = random_soft_gate(1000, 20, 1, {});
  std::uint64_t violations = 0;
  double worst = 0;
  for (const auto& t : gate.trials) {
    violations += t.concentration.violations;
    worst = std::max(worst, t.allocation_ratio);
    if (!t.passed()) o.detail << "seed " << t.seed << " failed; ";
  }
  o.require(gate.passed, "fewer than 2 failing seeds");
  o.detail << "20 seeds x 10^4 subsets: " << violations << " violations, worst allocation ratio " << worst
           << " (envelope " << allocation_ratio_envelope(1000) << ")";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"B_3 reference instance", criterion1},
      {"elegance table", criterion2},
      {"elegance sandwich for k <= 10", criterion3},
      {"in-order envy and run bounds", criterion4},
      {"89 / 94 gap on B_7", criterion5},
      {"TrickleDown ratio and certificate", criterion6},
      {"layout width bound", criterion7},
      {"any allocation is an |E|-approximation", criterion8},
      {"gadget audits", criterion9},
      {"G(n, 1/2) soft gate", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << "threw: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s %s (%s) [%.2fs]\n", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.str().c_str(), secs);
    failures += !o.passed;
  }
  return failures == 0 ? 0 : 1;
}

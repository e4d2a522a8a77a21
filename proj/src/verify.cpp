#include "gha/verify.hpp"

#include <functional>
#include <sstream>

#include "gha/approx.hpp"
#include "gha/error.hpp"
#include "gha/exact.hpp"
#include "gha/families.hpp"
#include "gha/gadgets.hpp"
#include "gha/random_graphs.hpp"
#include "gha/repunit.hpp"

namespace gha {
namespace {

using Check = std::function<std::string(bool&)>;

HouseValues sorted_values(std::vector<std::int64_t> raw) {
  std::sort(raw.begin(), raw.end());
  return HouseValues(std::vector<BigInt>(raw.begin(), raw.end()));
}

HouseValues random_houses(int n, std::uint64_t max_value, Rng& rng) {
  std::vector<std::int64_t> raw(n);
  for (auto& x : raw) x = static_cast<std::int64_t>(rng.below(max_value + 1));
  return sorted_values(std::move(raw));
}

Instance b3ref() {
  return Instance(families::complete_binary_tree(3),
                  sorted_values({0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 3, 3, 3, 3}));
}

std::vector<CheckResult> run_checks(const std::vector<std::pair<std::string, Check>>& checks) {
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks) {
    CheckResult r{name, false, ""};
    try {
      r.detail = fn(r.passed);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("threw: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> core_suite() {
  return run_checks({
      {"B_3 reference instance optimum is 5",
       [](bool& ok) {
         const Instance inst = b3ref();
         const BigInt opt = solve_exact_dp(inst).optimal_envy;
         const std::vector<BigInt> median{1, 0, 3, 0, 0, 1, 3, 0, 0, 0, 0, 1, 2, 3, 3};
         const BigInt med = envy(inst, allocation_from_values(inst.houses, median));
         ok = opt == 5 && med == 6;
         return "optimum " + to_decimal(opt) + ", global-median allocation " + to_decimal(med);
       }},
      {"subset DP matches brute force",
       [](bool& ok) {
         Rng rng(17);
         int mismatches = 0;
         for (int t = 0; t < 200; ++t) {
           const int n = 1 + static_cast<int>(rng.below(8));
           Instance inst(families::random_connected(n, 0.3, rng), random_houses(n, 20, rng));
           mismatches += solve_exact_dp(inst).optimal_envy != solve_exact_bruteforce(inst).optimal_envy;
         }
         ok = mismatches == 0;
         return std::to_string(mismatches) + " mismatches in 200";
       }},
      {"envy equals the weighted prefix-cut sum",
       [](bool& ok) {
         Rng rng(18);
         int bad = 0;
         for (int t = 0; t < 200; ++t) {
           const int n = 2 + static_cast<int>(rng.below(30));
           Instance inst(families::random_connected(n, 0.2, rng), random_houses(n, 1000, rng));
           Allocation a;
           a.assignment.resize(n);
           for (int i = 0; i < n; ++i) a.assignment[i] = i;
           rng.shuffle(a.assignment);
           const BigInt e = envy(inst, a);
           bad += e != weighted_profile_sum(prefix_cut_profile(inst, a), inst.houses);
           bad += e < inst.houses.spread() || e > inst.houses.spread() * inst.graph.edge_count();
         }
         ok = bad == 0;
         return std::to_string(bad) + " violations in 200";
       }},
      {"approximation certificates hold",
       [](bool& ok) {
         Rng rng(19);
         int bad = 0;
         for (int t = 0; t < 100; ++t) {
           const int n = 2 + static_cast<int>(rng.below(200));
           Graph tree = families::random_tree(n, rng);
           HouseValues h = random_houses(n, 100000, rng);
           for (const ApproxResult& r :
                {trickle_down(tree, h), layout_allocation(Instance(tree, h),
                                                          heuristic_layout(tree, LayoutStrategy::DfsOrder))}) {
             bad += r.certificate.achieved_envy > r.certificate.guarantee_bound;
           }
         }
         ok = bad == 0;
         return std::to_string(bad) + " violations in 200";
       }},
  });
}

std::vector<CheckResult> repunit_suite() {
  return run_checks({
      {"elegance table 1..20",
       [](bool& ok) {
         const std::vector<int> expected{1, 2, 1, 2, 3, 2, 1, 2, 3, 2, 3, 2, 3, 2, 1, 2, 3, 2, 3, 4};
         std::ostringstream got;
         ok = true;
         for (const auto& rec : elegance_table(20)) {
           got << rec.elegance;
           ok = ok && rec.elegance == expected[rec.m - 1];
         }
         return got.str();
       }},
      {"sandwich elegance - 1 <= delta <= elegance for k <= 8",
       [](bool& ok) {
         auto values = elegance_values(1 << 8);
         int bad = 0;
         for (int k = 1; k <= 8; ++k) {
           const auto& d = delta_profile_complete_binary(k);
           for (int i = 1; i < (1 << k); ++i) bad += d[i] > (*values)[i] || d[i] < (*values)[i] - 1;
         }
         ok = bad == 0;
         return std::to_string(bad) + " violations";
       }},
      {"runs <= 3 elegance - 2 up to 2^16",
       [](bool& ok) {
         auto values = elegance_values(1 << 16);
         int bad = 0;
         for (std::int64_t i = 1; i <= (1 << 16); ++i) bad += runs(i) > 3 * (*values)[i] - 2;
         ok = bad == 0;
         return std::to_string(bad) + " violations";
       }},
      {"89 and 94 on B_7",
       [](bool& ok) {
         auto [h89, h94] = value_agnostic_gap_instances(7);
         const auto& d = delta_profile_complete_binary(7);
         const BigInt a = inorder_allocation(7, h89.houses).certificate.achieved_envy;
         const BigInt b = inorder_allocation(7, h94.houses).certificate.achieved_envy;
         ok = d[89] == 3 && d[94] == 2 && a == 5 && b == 4;
         return "delta " + std::to_string(d[89]) + "/" + std::to_string(d[94]) + ", in-order " + to_decimal(a) +
                "/" + to_decimal(b);
       }},
  });
}

std::vector<CheckResult> gadget_suite() {
  return run_checks({
      {"grid cut lemma, all grids with rc <= 18",
       [](bool& ok) {
         std::uint64_t violations = 0, checked = 0;
         for (int r = 1; r <= 4; ++r) {
           for (int c = r; r * c <= 18; ++c) {
             auto rep = check_grid_cut_lemma(r, c);
             violations += rep.violations;
             checked += rep.subsets_checked;
           }
         }
         ok = violations == 0;
         return std::to_string(checked) + " subsets, " + std::to_string(violations) + " violations";
       }},
      {"flower conditions on 200 random flowers",
       [](bool& ok) {
         Rng rng(23);
         std::uint64_t violations = 0;
         for (int t = 0; t < 200; ++t) {
           const int k = 3 + static_cast<int>(rng.below(30));
           const int n = 1 + static_cast<int>(rng.below(5000));
           violations += check_flower_definition(build_flower(n, k)).violations;
         }
         ok = violations == 0;
         return std::to_string(violations) + " violations";
       }},
      {"bounded-degree tree YES envy equals the threshold",
       [](bool& ok) {
         ThreePartitionInstance tp{{2, 2, 2}, 1, 6};
         GadgetInstance g = gen_bounded_tree_instance(tp, {99, 999, true});
         const BigInt e = envy(g.instance, yes_allocation(g, *find_witness(tp)));
         ok = g.instance.n() == 384 && e == envy_yes_threshold(tp);
         return "envy " + to_decimal(e);
       }},
      {"hub gadget YES allocations stay under 3m^2",
       [](bool& ok) {
         ThreePartitionInstance tp{{1, 2, 3, 1, 1, 4}, 2, 6};
         const auto w = *find_witness(tp);
         ok = true;
         for (const GadgetInstance& g : {gen_depth2_tree(tp, 3), gen_clique(tp, 3), gen_grid(tp, 3)}) {
           ok = ok && envy(g.instance, yes_allocation(g, w)) <= yes_bound(g);
         }
         return std::string(ok ? "all within 12" : "bound exceeded");
       }},
  });
}

std::vector<CheckResult> random_suite() {
  return run_checks({
      {"cut concentration and allocation ratio on G(1000, 1/2), 20 seeds",
       [](bool& ok) {
         const SoftGateResult gate = random_soft_gate(1000, 20, 1, {});
         ok = gate.passed;
         double worst = 0;
         for (const auto& t : gate.trials) worst = std::max(worst, t.allocation_ratio);
         return std::to_string(gate.failures) + " failing seeds, worst ratio " + std::to_string(worst);
       }},
  });
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "core") return Suite::Core;
  if (name == "repunit") return Suite::Repunit;
  if (name == "gadgets") return Suite::Gadgets;
  if (name == "random") return Suite::Random;
  throw Error(ErrorKind::BadParameters, "unknown suite '" + std::string(name) + "'");
}

std::vector<CheckResult> run_suite(Suite suite) {
  switch (suite) {
    case Suite::Core: return core_suite();
    case Suite::Repunit: return repunit_suite();
    case Suite::Gadgets: return gadget_suite();
    case Suite::Random: return random_suite();
  }
  return {};
}

}  // namespace gha

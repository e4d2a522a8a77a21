#include "gha/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "gha/approx.hpp"
#include "gha/bench.hpp"
#include "gha/error.hpp"
#include "gha/exact.hpp"
#include "gha/gadgets.hpp"
#include "gha/io.hpp"
#include "gha/random_graphs.hpp"
#include "gha/repunit.hpp"
#include "gha/verify.hpp"

namespace gha {
namespace {

using io::Json;

struct Options {
  std::string instance;
  std::string out;
  std::string method = "dp";
  int cap = 0;

  std::string algo;
  std::string layout = "bfs";
  int depth = -1;
  std::string values;

  std::string family;
  std::string tp;
  std::int64_t C = 1;
  std::uint64_t seed = 1;
  std::string roles;
  bool desk_scale = false;
  int small_k = 99;
  int large_k = 999;
  int flower_n = 0;
  int flower_k = 3;

  std::int64_t upto = 20;

  int n = 1000;
  int trials = 1;
  std::uint64_t subsets = 10000;
  std::uint64_t alloc_trials = 100;
  std::string summary;

  std::string suite;
  std::string manifest;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    io::write_text_file(o.out, text);
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

int cmd_solve(const Options& o, std::ostream& out) {
  const Instance inst = io::instance_from_json(io::read_json_file(o.instance));
  ExactResult r;
  if (o.method == "dp") {
    r = solve_exact_dp(inst, o.cap > 0 ? o.cap : io::cap_from_env(kDefaultDpCap));
  } else {
    r = solve_exact_bruteforce(inst, o.cap > 0 ? o.cap : io::cap_from_env(kBruteforceCap));
  }
  emit(o, out, dump(io::exact_result_to_json(r)));
  return kExitOk;
}

HouseValues read_values(const std::string& path) {
  const Json doc = io::read_json_file(path);
  return HouseValues(io::parse_values(doc.is_object() ? doc.at("values") : doc).values);
}

LayoutStrategy parse_layout(const std::string& name) {
  if (name == "bfs") return LayoutStrategy::BfsOrder;
  if (name == "dfs") return LayoutStrategy::DfsOrder;
  if (name == "tree") return LayoutStrategy::TreeTrickleOrder;
  return LayoutStrategy::ExactSmall;
}

int cmd_approx(const Options& o, std::ostream& out) {
  std::optional<Instance> inst;
  if (!o.instance.empty()) inst = io::instance_from_json(io::read_json_file(o.instance));
  Json doc;
  if (o.algo == "inorder") {
    HouseValues houses = inst ? inst->houses : read_values(o.values);
    int depth = o.depth;
    if (depth < 0) {
      depth = 0;
      while ((std::size_t{2} << depth) - 1 < houses.size()) ++depth;
    }
    doc = io::approx_result_to_json(inorder_allocation(depth, houses));
    doc["lower_bound"] = to_decimal(inorder_lower_bound(depth, houses));
  } else {
    if (!inst) throw Error(ErrorKind::BadParameters, "--instance is required for --algo " + o.algo);
    if (o.algo == "trickle") {
      doc = io::approx_result_to_json(trickle_down(inst->graph, inst->houses));
    } else {
      const int cap = io::cap_from_env(kDefaultCutwidthCap);
      doc = io::approx_result_to_json(
          layout_allocation(*inst, heuristic_layout(inst->graph, parse_layout(o.layout), cap)));
    }
  }
  emit(o, out, dump(doc));
  return kExitOk;
}

GadgetInstance flower_instance(const Options& o) {
  const Flower f = build_flower(o.flower_n, o.flower_k);
  std::vector<BigInt> values;
  for (int v = 0; v < o.flower_n; ++v) values.emplace_back(v);
  GadgetInstance g;
  g.instance = Instance(f.tree, HouseValues(std::move(values)));
  for (Vertex v = 0; v < f.tree.n(); ++v) g.roles.push_back(v == 0 ? "pistil" : "petal");
  return g;
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
  GadgetInstance g;
  std::optional<PartitionWitness> witness;
  std::string family = o.family;
  if (family == "flower") {
    g = flower_instance(o);
  } else {
    if (o.tp.empty()) throw Error(ErrorKind::BadParameters, "--tp is required for --family " + family);
    const ThreePartitionInstance tp = io::three_partition_from_json(io::read_json_file(o.tp));
    switch (parse_family(family)) {
      case GadgetFamily::Depth2: g = gen_depth2_tree(tp, o.C); break;
      case GadgetFamily::Clique: g = gen_clique(tp, o.C); break;
      case GadgetFamily::Grid: g = gen_grid(tp, o.C); break;
      case GadgetFamily::Expander: g = gen_expander(tp, o.C, o.seed); break;
      case GadgetFamily::BoundedTree:
        g = gen_bounded_tree_instance(tp, {o.small_k, o.large_k, o.desk_scale});
        break;
    }
    witness = find_witness(tp);
  }
  emit(o, out, dump(io::instance_to_json(g.instance)));
  Json roles = io::roles_to_json(g);
  if (family == "flower") roles["family"] = "flower";
  std::string roles_path = o.roles;
  if (roles_path.empty() && !o.out.empty()) roles_path = io::sidecar_path(o.out, "roles").string();
  if (!roles_path.empty()) io::write_text_file(roles_path, dump(roles));

  err << family << ": " << g.instance.n() << " vertices, " << g.instance.graph.edge_count() << " edges\n";
  if (witness) {
    const Allocation yes = yes_allocation(g, *witness);
    const BigInt e = envy(g.instance, yes);
    err << "YES allocation envy " << to_decimal(e) << ", bound " << to_decimal(yes_bound(g)) << "\n";
    if (!o.out.empty()) {
      Json doc = io::allocation_to_json(yes);
      doc["envy"] = to_decimal(e);
      doc["yes_bound"] = to_decimal(yes_bound(g));
      io::write_text_file(io::sidecar_path(o.out, "yes"), dump(doc));
    }
  } else if (family != "flower") {
    err << "no 3-Partition witness found\n";
  }
  return kExitOk;
}

std::string format_terms(const RepunitRepresentation& r) {
  std::string s;
  for (int t : r.terms) {
    if (!s.empty()) s += ' ';
    s += (t > 0 ? "+" : "-") + std::to_string(std::abs(t));
  }
  return s;
}

int cmd_elegance(const Options& o, std::ostream& out) {
  if (o.upto < 1) throw Error(ErrorKind::OutOfRange, "--upto must be at least 1", o.upto);
  std::string csv = "m,elegance,witness_terms,runs\n";
  for (const auto& rec : elegance_table(o.upto)) {
    csv += std::to_string(rec.m) + "," + std::to_string(rec.elegance) + "," + format_terms(rec.witness) + "," +
           std::to_string(runs(static_cast<std::uint64_t>(rec.m))) + "\n";
  }
  emit(o, out, csv);
  return kExitOk;
}

int cmd_random(const Options& o, std::ostream& out, std::ostream& err) {
  RandomTrialOptions opts;
  opts.subset_samples = o.subsets;
  opts.allocation_trials = o.alloc_trials;
  const SoftGateResult gate = random_soft_gate(o.n, o.trials, o.seed, opts);
  std::ostringstream csv;
  csv << "seed,n,edges,samples,worst_low_ratio,worst_high_ratio,violations,allocation_ratio,envelope,passed\n";
  for (const auto& t : gate.trials) {
    csv << t.seed << ',' << t.n << ',' << t.edges << ',' << t.concentration.samples << ','
        << boost::rational_cast<double>(t.concentration.worst_low_ratio) << ','
        << boost::rational_cast<double>(t.concentration.worst_high_ratio) << ',' << t.concentration.violations
        << ',' << t.allocation_ratio << ',' << t.envelope << ',' << (t.passed() ? 1 : 0) << '\n';
  }
  emit(o, out, csv.str());
  Json summary{{"n", o.n},
               {"trials", o.trials},
               {"base_seed", o.seed},
               {"epsilon", concentration_epsilon(o.n)},
               {"envelope", allocation_ratio_envelope(o.n)},
               {"failing_seeds", gate.failures},
               {"passed", gate.passed}};
  std::string summary_path = o.summary;
  if (summary_path.empty() && !o.out.empty()) summary_path = io::sidecar_path(o.out, "summary").string();
  if (summary_path.empty()) {
    err << summary.dump() << "\n";
  } else {
    io::write_text_file(summary_path, dump(summary));
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto results = run_suite(parse_suite(o.suite));
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    all = all && r.passed;
  }
  return all ? kExitOk : kExitVerification;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const BenchManifest manifest = parse_manifest(io::read_json_file(o.manifest));
  const BenchResult result = bench_run(manifest, io::cap_from_env(kDefaultDpCap));
  if (o.out.empty()) {
    out << bench_csv(result);
  } else {
    write_bench_outputs(result, o.out);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graphical house allocation toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Exact minimum envy");
  solve->add_option("--instance", o.instance, "Instance JSON")->required();
  solve->add_option("--method", o.method)->check(CLI::IsMember({"dp", "bruteforce"}));
  solve->add_option("--cap", o.cap, "Vertex cap (default: GHA_CAP_N or built-in)");
  solve->add_option("--out", o.out);

  auto* approx = app.add_subcommand("approx", "Approximate allocation with a certificate");
  approx->add_option("--algo", o.algo)->required()->check(CLI::IsMember({"trickle", "layout", "inorder"}));
  approx->add_option("--instance", o.instance);
  approx->add_option("--layout", o.layout)->check(CLI::IsMember({"bfs", "dfs", "tree", "exact"}));
  approx->add_option("--depth", o.depth);
  approx->add_option("--values", o.values, "Values JSON (array or {\"values\": [...]})");
  approx->add_option("--out", o.out);

  auto* generate = app.add_subcommand("generate", "Build a reduction gadget");
  generate->add_option("--family", o.family)
      ->required()
      ->check(CLI::IsMember({"depth2", "clique", "grid", "expander", "flower", "bounded-tree"}));
  generate->add_option("--tp", o.tp, "3-Partition JSON {\"m\", \"T\", \"items\"}");
  generate->add_option("--C", o.C);
  generate->add_option("--seed", o.seed);
  generate->add_option("--out", o.out);
  generate->add_option("--roles", o.roles, "Role sidecar path (default: <out>.roles.json)");
  generate->add_flag("--desk-scale", o.desk_scale, "Allow a_i < 1000 for bounded-tree");
  generate->add_option("--small-k", o.small_k);
  generate->add_option("--large-k", o.large_k);
  generate->add_option("--n", o.flower_n, "Flower size");
  generate->add_option("--k", o.flower_k, "Flower branching");

  auto* eleg = app.add_subcommand("elegance", "Elegance table as CSV");
  eleg->add_option("--upto", o.upto);
  eleg->add_option("--out", o.out);

  auto* random = app.add_subcommand("random-experiment", "G(n, 1/2) concentration trials");
  random->add_option("--n", o.n);
  random->add_option("--seed", o.seed);
  random->add_option("--trials", o.trials);
  random->add_option("--subsets", o.subsets);
  random->add_option("--allocations", o.alloc_trials);
  random->add_option("--out", o.out);
  random->add_option("--summary", o.summary);

  auto* verify = app.add_subcommand("verify", "Run a self-check suite");
  verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"core", "repunit", "gadgets", "random"}));

  auto* bench = app.add_subcommand("bench", "Run a benchmark manifest");
  bench->add_option("--manifest", o.manifest)->required();
  bench->add_option("--out", o.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out);
    if (approx->parsed()) return cmd_approx(o, out);
    if (generate->parsed()) return cmd_generate(o, out, err);
    if (eleg->parsed()) return cmd_elegance(o, out);
    if (random->parsed()) return cmd_random(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const Error& e) {
    err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::TooLarge ? kExitResourceCap : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gha

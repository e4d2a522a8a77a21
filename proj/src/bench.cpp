#include "gha/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "gha/approx.hpp"
#include "gha/error.hpp"
#include "gha/exact.hpp"
#include "gha/families.hpp"
#include "gha/rng.hpp"

namespace gha {
namespace {

struct Job {
  const BenchEntry* entry;
  int size;
  std::uint64_t seed;
};

Graph bench_graph(const BenchEntry& e, int size, Rng& rng) {
  if (e.family == "path") return families::path(size);
  if (e.family == "cycle") return families::cycle(size);
  if (e.family == "star") return families::star(size - 1);
  if (e.family == "complete") return families::complete(size);
  if (e.family == "grid") return families::grid(2, size / 2);
  if (e.family == "complete_binary_tree") return families::complete_binary_tree(size);
  if (e.family == "random_tree") return families::random_tree(size, rng);
  if (e.family == "random_connected") return families::random_connected(size, e.p, rng);
  throw Error(ErrorKind::UnsupportedFamily, "unknown bench family '" + e.family + "'");
}

std::vector<io::BenchRecord> run_job(const Job& job, int exact_cap) {
  const BenchEntry& e = *job.entry;
  const std::string id = e.family + "-" + std::to_string(job.size) + "-s" + std::to_string(job.seed);
  std::vector<io::BenchRecord> out;
  auto blank = [&](const std::string& algorithm) {
    io::BenchRecord r;
    r.instance_id = id;
    r.family = e.family;
    r.n = 0;
    r.algorithm = algorithm;
    r.seed = job.seed;
    return r;
  };

  Instance inst;
  try {
    Rng rng(mix_seed(job.seed, static_cast<std::uint64_t>(job.size)));
    Graph g = bench_graph(e, job.size, rng);
    std::vector<BigInt> values(g.n());
    for (auto& v : values) v = rng.below(static_cast<std::uint64_t>(e.max_value) + 1);
    std::sort(values.begin(), values.end());
    inst = Instance(std::move(g), HouseValues(std::move(values)));
  } catch (const Error& err) {
    for (const auto& a : e.algorithms) {
      auto r = blank(a);
      r.error = std::string(error_kind_name(err.kind()));
      out.push_back(std::move(r));
    }
    return out;
  }

  std::optional<BigInt> optimum;
  for (const auto& a : e.algorithms) {
    auto r = blank(a);
    r.n = inst.n();
    const auto start = std::chrono::steady_clock::now();
    try {
      if (a == "exact" || a == "bruteforce") {
        ExactResult x = a == "exact" ? solve_exact_dp(inst, exact_cap) : solve_exact_bruteforce(inst);
        r.achieved_envy = x.optimal_envy;
        r.certificate_bound = x.optimal_envy;
        optimum = x.optimal_envy;
      } else {
        ApproxResult x;
        if (a == "trickle") {
          x = trickle_down(inst.graph, inst.houses);
        } else if (a == "layout") {
          x = layout_allocation(inst, heuristic_layout(inst.graph, LayoutStrategy::BfsOrder));
        } else if (a == "inorder") {
          if (e.family != "complete_binary_tree") {
            throw Error(ErrorKind::NotCompleteTreeSize, "inorder runs on complete_binary_tree only");
          }
          x = inorder_allocation(job.size, inst.houses);
        } else {
          throw Error(ErrorKind::BadParameters, "unknown algorithm '" + a + "'");
        }
        r.achieved_envy = x.certificate.achieved_envy;
        r.certificate_bound = x.certificate.guarantee_bound;
      }
    } catch (const Error& err) {
      r.error = std::string(error_kind_name(err.kind()));
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  if (optimum) {
    for (auto& r : out) {
      if (r.error.empty()) r.optimal_envy = optimum;
    }
  }
  return out;
}

std::string join_plot_row(const io::BenchRecord& r) {
  std::ostringstream row;
  const long double ratio =
      static_cast<long double>(r.achieved_envy) / static_cast<long double>(*r.optimal_envy);
  row << r.family << ',' << r.algorithm << ',' << r.n << ',' << r.seed << ',' << static_cast<double>(ratio)
      << '\n';
  return row.str();
}

}  // namespace

BenchManifest parse_manifest(const io::Json& doc) {
  const io::Json* entries = &doc;
  if (doc.is_object()) {
    if (!doc.contains("entries")) throw Error(ErrorKind::ParseError, "manifest needs an 'entries' array");
    entries = &doc.at("entries");
  }
  if (!entries->is_array()) throw Error(ErrorKind::ParseError, "manifest entries must be an array");
  BenchManifest m;
  try {
    for (const auto& j : *entries) {
      BenchEntry e;
      e.family = j.at("family").get<std::string>();
      e.sizes = j.at("sizes").get<std::vector<int>>();
      e.algorithms = j.at("algorithms").get<std::vector<std::string>>();
      e.seeds = j.value("seeds", std::vector<std::uint64_t>{1});
      e.max_value = j.value("max_value", e.max_value);
      e.p = j.value("p", e.p);
      m.entries.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& err) {
    throw Error(ErrorKind::ParseError, std::string("bad manifest entry: ") + err.what());
  }
  return m;
}

BenchResult bench_run(const BenchManifest& manifest, int exact_cap, unsigned threads) {
  std::vector<Job> jobs;
  for (const auto& e : manifest.entries) {
    for (int size : e.sizes) {
      for (auto seed : e.seeds) jobs.push_back({&e, size, seed});
    }
  }
  std::vector<std::vector<io::BenchRecord>> results(jobs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run_job(jobs[i], exact_cap);
    });
  }
  pool.clear();

  BenchResult out;
  for (auto& batch : results) {
    for (auto& r : batch) {
      if (r.optimal_envy && *r.optimal_envy > 0) {
        auto& plot = out.plot_data[r.family];
        if (plot.empty()) plot = "schema=1\nfamily,algorithm,n,seed,ratio\n";
        plot += join_plot_row(r);
      }
      out.records.push_back(std::move(r));
    }
  }
  return out;
}

std::string bench_csv(const BenchResult& result) {
  std::string csv = io::bench_csv_header();
  for (const auto& r : result.records) csv += io::bench_csv_row(r);
  return csv;
}

void write_bench_outputs(const BenchResult& result, const std::filesystem::path& out) {
  io::write_text_file(out, bench_csv(result));
  for (const auto& [family, data] : result.plot_data) {
    std::filesystem::path plot = out;
    plot.replace_extension();
    plot += "." + family + ".plot.csv";
    io::write_text_file(plot, data);
  }
}

}  // namespace gha

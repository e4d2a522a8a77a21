#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "gha/io.hpp"

namespace gha {

/// One manifest entry: every (size, seed) pair becomes an instance and each
/// algorithm runs on it. For complete_binary_tree the sizes are depths.
struct BenchEntry {
  std::string family;
  std::vector<int> sizes;
  std::vector<std::string> algorithms;
  std::vector<std::uint64_t> seeds;
  std::int64_t max_value = 1000;
  /// Extra-edge probability for random_connected.
  double p = 0.2;
};

struct BenchManifest {
  std::vector<BenchEntry> entries;
};

/// Accepts {"entries": [...]} or a bare array of entries.
BenchManifest parse_manifest(const io::Json& doc);

inline const std::vector<std::string> kBenchAlgorithms{"exact", "bruteforce", "trickle", "layout", "inorder"};

struct BenchResult {
  std::vector<io::BenchRecord> records;
  /// family -> CSV with columns family,algorithm,n,seed,ratio (achieved over
  /// optimal), one row per record that has a positive optimum.
  std::map<std::string, std::string> plot_data;
};

/// Runs every instance of the manifest on a worker pool. Records follow
/// manifest order; failures are recorded on the record and do not stop the
/// run. `exact_cap` bounds the subset DP.
BenchResult bench_run(const BenchManifest& manifest, int exact_cap, unsigned threads = 0);

std::string bench_csv(const BenchResult& result);

/// Writes the CSV to `out` and each family's plot data next to it as
/// <stem>.<family>.plot.csv.
void write_bench_outputs(const BenchResult& result, const std::filesystem::path& out);

}  // namespace gha

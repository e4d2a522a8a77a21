#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gha/approx.hpp"
#include "gha/exact.hpp"
#include "gha/gadgets.hpp"
#include "gha/graph.hpp"

namespace gha::io {

using Json = nlohmann::ordered_json;

/// Values as written on the wire. Integers are decimal strings; "a/b" and
/// "a.b" are accepted too, and the whole list is then multiplied by the
/// least common denominator.
struct IngestedValues {
  std::vector<BigInt> values;
  BigInt scale = 1;
};

IngestedValues parse_values(const Json& array);

Json instance_to_json(const Instance& instance);
/// Throws ParseError for malformed documents; graph and value errors come
/// from validation.
Instance instance_from_json(const Json& doc);

Json allocation_to_json(const Allocation& alloc);
Allocation allocation_from_json(const Json& doc);

Json exact_result_to_json(const ExactResult& result);
Json approx_result_to_json(const ApproxResult& result);

Json three_partition_to_json(const ThreePartitionInstance& tp);
ThreePartitionInstance three_partition_from_json(const Json& doc);

/// {"family", "C", "seed", "roles": [...]} sidecar for generated gadgets.
Json roles_to_json(const GadgetInstance& gadget);

struct BenchRecord {
  std::string instance_id;
  std::string family;
  int n = 0;
  std::string algorithm;
  BigInt achieved_envy = 0;
  BigInt certificate_bound = 0;
  std::optional<BigInt> optimal_envy;
  double wall_ms = 0;
  std::uint64_t seed = 0;
  /// Error kind name when the record failed, empty otherwise.
  std::string error;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

Json bench_record_to_json(const BenchRecord& record);
BenchRecord bench_record_from_json(const Json& doc);

/// "schema=1" followed by the column header.
std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& record);
/// Inverse of bench_csv_row.
BenchRecord bench_csv_parse_row(std::string_view line);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// GHA_CAP_N when set to a positive integer, otherwise `fallback`.
int cap_from_env(int fallback);

/// "x.json" -> "x.<tag>.json"; other names get ".<tag>.json" appended.
std::filesystem::path sidecar_path(const std::filesystem::path& base, std::string_view tag);

}  // namespace gha::io

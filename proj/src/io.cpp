#include "gha/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gha/error.hpp"

namespace gha::io {
namespace {

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorKind::ParseError, message); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

BigInt as_bigint(const Json& j, const char* what) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    return BigInt(j.get<std::uint64_t>());
  }
  parse_error(std::string(what) + " must be a non-negative decimal string");
}

struct Fraction {
  BigInt num;
  BigInt den;
};

Fraction parse_fraction(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Fraction f{parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1))};
    if (f.den == 0) parse_error("zero denominator in '" + std::string(text) + "'");
    return f;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) parse_error("'.' is not a number");
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const BigInt w = whole.empty() ? BigInt(0) : parse_bigint(whole);
    const BigInt f = frac.empty() ? BigInt(0) : parse_bigint(frac);
    return {w * den + f, den};
  }
  return {parse_bigint(text), 1};
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

double parse_double(const std::string& text) {
  double x = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || ptr != text.data() + text.size()) parse_error("bad number '" + text + "'");
  return x;
}

void check_csv_safe(const std::string& text) {
  if (text.find_first_of(",\n\r") != std::string::npos) {
    throw Error(ErrorKind::BadParameters, "CSV field contains a separator: '" + text + "'");
  }
}

}  // namespace

IngestedValues parse_values(const Json& array) {
  if (!array.is_array()) parse_error("values must be an array");
  std::vector<Fraction> parsed;
  parsed.reserve(array.size());
  BigInt lcd = 1;
  for (const auto& item : array) {
    if (item.is_string()) {
      parsed.push_back(parse_fraction(item.get<std::string>()));
    } else {
      parsed.push_back({as_bigint(item, "value"), 1});
    }
    auto& f = parsed.back();
    if (f.num != 0) {
      const BigInt g = boost::multiprecision::gcd(f.num, f.den);
      f.num /= g;
      f.den /= g;
    } else {
      f.den = 1;
    }
    lcd = boost::multiprecision::lcm(lcd, f.den);
  }
  IngestedValues out;
  out.scale = lcd;
  out.values.reserve(parsed.size());
  for (const auto& f : parsed) out.values.push_back(f.num * (lcd / f.den));
  return out;
}

Json instance_to_json(const Instance& instance) {
  Json edges = Json::array();
  for (auto [u, v] : instance.graph.edges()) edges.push_back({u, v});
  Json values = Json::array();
  for (const auto& h : instance.houses.values()) values.push_back(to_decimal(h));
  return Json{{"n", instance.n()}, {"edges", std::move(edges)}, {"values", std::move(values)}};
}

Instance instance_from_json(const Json& doc) {
  InstanceData data;
  data.n = static_cast<int>(as_int(field(doc, "n"), "n"));
  const Json& edges = field(doc, "edges");
  if (!edges.is_array()) parse_error("edges must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) parse_error("each edge must be a pair [u, v]");
    data.edges.emplace_back(static_cast<Vertex>(as_int(e[0], "edge endpoint")),
                            static_cast<Vertex>(as_int(e[1], "edge endpoint")));
  }
  data.values = parse_values(field(doc, "values")).values;
  if (data.values.size() != static_cast<std::size_t>(data.n)) {
    throw Error(ErrorKind::LengthMismatch,
                "expected " + std::to_string(data.n) + " values, got " + std::to_string(data.values.size()));
  }
  return validate_instance(data);
}

Json allocation_to_json(const Allocation& alloc) { return Json{{"assignment", alloc.assignment}}; }

Allocation allocation_from_json(const Json& doc) {
  const Json& a = field(doc, "assignment");
  if (!a.is_array()) parse_error("assignment must be an array");
  Allocation out;
  for (const auto& x : a) out.assignment.push_back(static_cast<int>(as_int(x, "assignment entry")));
  check_allocation(out, static_cast<int>(out.assignment.size()));
  return out;
}

Json exact_result_to_json(const ExactResult& result) {
  return Json{{"optimal_envy", to_decimal(result.optimal_envy)},
              {"assignment", result.witness.assignment},
              {"states_explored", result.states_explored}};
}

Json approx_result_to_json(const ApproxResult& result) {
  return Json{{"assignment", result.allocation.assignment},
              {"achieved_envy", to_decimal(result.certificate.achieved_envy)},
              {"bound_name", std::string(bound_name_string(result.certificate.bound_name))},
              {"guarantee_bound", to_decimal(result.certificate.guarantee_bound)}};
}

Json three_partition_to_json(const ThreePartitionInstance& tp) {
  return Json{{"m", tp.m}, {"T", tp.T}, {"items", tp.items}};
}

ThreePartitionInstance three_partition_from_json(const Json& doc) {
  ThreePartitionInstance tp;
  const Json& items = field(doc, "items");
  if (!items.is_array()) parse_error("items must be an array");
  for (const auto& x : items) tp.items.push_back(as_int(x, "item"));
  tp.m = doc.contains("m") ? static_cast<int>(as_int(doc.at("m"), "m"))
                           : static_cast<int>(tp.items.size() / 3);
  tp.T = as_int(field(doc, "T"), "T");
  tp.validate();
  return tp;
}

Json roles_to_json(const GadgetInstance& gadget) {
  Json doc{{"family", std::string(family_name(gadget.family))},
           {"C", gadget.C},
           {"seed", gadget.seed},
           {"roles", gadget.roles}};
  if (!gadget.expansion.empty()) {
    Json exp = Json::array();
    for (const auto& r : gadget.expansion) {
      exp.push_back(std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()));
    }
    doc["expansion"] = std::move(exp);
  }
  return doc;
}

Json bench_record_to_json(const BenchRecord& r) {
  Json doc{{"instance_id", r.instance_id},
           {"family", r.family},
           {"n", r.n},
           {"algorithm", r.algorithm},
           {"achieved_envy", to_decimal(r.achieved_envy)},
           {"certificate_bound", to_decimal(r.certificate_bound)},
           {"optimal_envy", r.optimal_envy ? Json(to_decimal(*r.optimal_envy)) : Json(nullptr)},
           {"wall_ms", r.wall_ms},
           {"seed", r.seed},
           {"error", r.error}};
  return doc;
}

BenchRecord bench_record_from_json(const Json& doc) {
  BenchRecord r;
  r.instance_id = field(doc, "instance_id").get<std::string>();
  r.family = field(doc, "family").get<std::string>();
  r.n = static_cast<int>(as_int(field(doc, "n"), "n"));
  r.algorithm = field(doc, "algorithm").get<std::string>();
  r.achieved_envy = as_bigint(field(doc, "achieved_envy"), "achieved_envy");
  r.certificate_bound = as_bigint(field(doc, "certificate_bound"), "certificate_bound");
  if (const Json& opt = field(doc, "optimal_envy"); !opt.is_null()) r.optimal_envy = as_bigint(opt, "optimal_envy");
  r.wall_ms = field(doc, "wall_ms").get<double>();
  r.seed = field(doc, "seed").get<std::uint64_t>();
  r.error = doc.value("error", "");
  return r;
}

std::string bench_csv_header() {
  return "schema=1\ninstance_id,family,n,algorithm,achieved_envy,certificate_bound,optimal_envy,wall_ms,seed,error\n";
}

std::string bench_csv_row(const BenchRecord& r) {
  for (const auto* s : {&r.instance_id, &r.family, &r.algorithm, &r.error}) check_csv_safe(*s);
  std::ostringstream out;
  out << r.instance_id << ',' << r.family << ',' << r.n << ',' << r.algorithm << ','
      << to_decimal(r.achieved_envy) << ',' << to_decimal(r.certificate_bound) << ','
      << (r.optimal_envy ? to_decimal(*r.optimal_envy) : std::string()) << ',' << format_double(r.wall_ms)
      << ',' << r.seed << ',' << r.error << '\n';
  return out.str();
}

BenchRecord bench_csv_parse_row(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  const auto cells = split_csv(line);
  if (cells.size() != 10) parse_error("expected 10 CSV columns, got " + std::to_string(cells.size()));
  BenchRecord r;
  r.instance_id = cells[0];
  r.family = cells[1];
  r.n = static_cast<int>(parse_double(cells[2]));
  r.algorithm = cells[3];
  r.achieved_envy = parse_bigint(cells[4]);
  r.certificate_bound = parse_bigint(cells[5]);
  if (!cells[6].empty()) r.optimal_envy = parse_bigint(cells[6]);
  r.wall_ms = parse_double(cells[7]);
  r.seed = std::stoull(cells[8]);
  r.error = cells[9];
  return r;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error("'" + path.string() + "': " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path.string() + "'");
  out << text;
}

int cap_from_env(int fallback) {
  const char* raw = std::getenv("GHA_CAP_N");
  if (raw == nullptr) return fallback;
  int value = 0;
  auto [ptr, ec] = std::from_chars(raw, raw + std::char_traits<char>::length(raw), value);
  if (ec != std::errc() || *ptr != '\0' || value <= 0) return fallback;
  return value;
}

std::filesystem::path sidecar_path(const std::filesystem::path& base, std::string_view tag) {
  std::filesystem::path out = base;
  if (base.extension() == ".json") {
    out.replace_extension(std::string(".") + std::string(tag) + ".json");
  } else {
    out += std::string(".") + std::string(tag) + ".json";
  }
  return out;
}

}  // namespace gha::io

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gha {

enum class Suite { Core, Repunit, Gadgets, Random };

Suite parse_suite(std::string_view name);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Self-checks behind `verify --suite`. Each suite is seeded and finishes in
/// well under a minute.
std::vector<CheckResult> run_suite(Suite suite);

}  // namespace gha

#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "cliff/sampling.hpp"

namespace cliff::verify {

// One machine-checked algebraic fact. `property` states the identity being
// verified; `detail` carries the counterexample or a note when it fails.
struct CheckResult {
  std::string id;
  std::string property;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }
};

const std::vector<std::string>& suite_names();  // core, groups, embeddings, spinors, all

// Runs the named suite; property checks draw from the given seed.
Report run_suite(const std::string& suite, std::uint64_t seed = kDefaultSeed);

nlohmann::json report_to_json(const Report& report);
std::string report_to_text(const Report& report);

}  // namespace cliff::verify

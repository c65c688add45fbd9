#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace realcmp::cli {

/// One invocation. Unset bounds take their defaults from the cap D:
/// N = D + 1, max degree D - 1 for homology tables and D - 2 for isomorphism
/// certificates, chain bound min(D, 2).
struct JobConfig {
  std::string command = "homology";  // build | homology | verify | counterexample | report
  std::string selector;              // verify only
  std::string input = "point";       // built-in name or path to a JSON file
  std::string kind = "none";         // none | fat | unravel | simp
  std::string format = "text";       // text | json | csv
  int cap = 3;
  std::optional<int> flag_bound;
  std::optional<int> max_degree;
  std::optional<int> chain_bound;
  std::uint64_t seed = 0;
  int rho_dimension = 2;
  int grid = 6;

  int n_bound() const { return flag_bound.value_or(cap + 1); }
  int r_bound() const { return chain_bound.value_or(cap < 2 ? cap : 2); }
  /// Throws ConfigError on violated invariants.
  void validate() const;
};

const std::vector<std::string>& selectors();

struct JobResult {
  nlohmann::json report;
  bool pass = true;
};

/// Runs the job. Throws ConfigError or SchemaError on bad configuration or input.
JobResult run(const JobConfig& config);
/// The report in the configured format, newline terminated.
std::string render(const JobResult& result, const JobConfig& config);

}  // namespace realcmp::cli

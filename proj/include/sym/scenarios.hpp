#pragma once

// Named verification scenarios: each one checks a family of quantitative
// claims (see claims.hpp) and returns a ScenarioReport. Runs are
// deterministic for fixed options; wall_time_ms stays 0 unless timings are
// requested, so that repeated runs serialize byte-identically.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sym/report.hpp"

namespace sym {

struct ScenarioOptions {
  std::map<std::string, std::string> params;  // scenario-specific key=value
  std::string backend;      // "" = scenario default, else "exact" | "approx"
  double tolerance = 1e-9;  // floor; closed-form comparisons widen to 1e-7
  std::uint64_t seed = 1;
  bool timings = false;  // record wall time (breaks byte-identical output)
};

// All scenario ids, sorted; stable across runs.
const std::vector<std::string>& scenario_names();

// Claim id the scenario reports against. Throws UnknownScenario.
const std::string& scenario_claim(const std::string& scenario);

// Runs one scenario. Throws UnknownScenario for unregistered ids and
// BadParams for unknown/invalid parameters or unsupported backends.
ScenarioReport run_scenario(const std::string& scenario, const ScenarioOptions& options);

// CSV table for the admissible-region figure in dimension n, one row per
// requested asymmetry. Columns: s, alpha_low, alpha_measured,
// alpha_high_bound, beta_low, beta_measured, beta_high_bound, alpha_region,
// beta_region. Measured columns come from the attaining constructions (caps
// and hexagons in dimension 2, caps otherwise). Throws BadParams for n < 2 or
// values outside [1, n].
std::string emit_plot_data(int n, const std::vector<double>& s_values);

}  // namespace sym

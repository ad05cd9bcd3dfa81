#pragma once

// Report types produced by the scenario runner and their serialization to
// json / csv / text. Field order is fixed so that identical runs produce
// byte-identical documents.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sym/errors.hpp"
#include "sym/scalar.hpp"

namespace sym {

// One computed-vs-expected comparison inside a scenario. `expected_source`
// says where the expected value comes from:
//   closed-form - a formula or law this library also implements,
//   derived     - a value frozen from an independent oracle computation,
//   trivial     - definitional (endpoints, identities, error contracts).
struct CheckResult {
  std::string name;
  std::string computed;
  std::string expected;
  std::string expected_source;
  bool pass = false;
};

struct ScenarioReport {
  std::string scenario;
  std::string claim;    // id into claim_catalog()
  std::string backend;  // "exact" | "approx"
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::int64_t wall_time_ms = 0;
  bool pass = true;
  std::vector<CheckResult> checks;
};

inline void finalize_pass(ScenarioReport& rep) {
  rep.pass = true;
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
}

namespace detail {

inline std::string csv_escape(const std::string& field) {
  bool needs_quotes = false;
  for (char c : field)
    if (c == ',' || c == '"' || c == '\n') needs_quotes = true;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline nlohmann::ordered_json report_to_json(const ScenarioReport& rep) {
  nlohmann::ordered_json j;
  j["scenario"] = rep.scenario;
  j["claim"] = rep.claim;
  j["backend"] = rep.backend;
  j["tolerance"] = rep.tolerance;
  j["seed"] = rep.seed;
  j["wall_time_ms"] = rep.wall_time_ms;
  j["pass"] = rep.pass;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["computed"] = c.computed;
    jc["expected"] = c.expected;
    jc["expected_source"] = c.expected_source;
    jc["pass"] = c.pass;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace detail

// Serializes reports to one document. Formats: "json" (versioned schema),
// "csv" (one row per check, header included), "text" (human-readable).
inline std::string emit_report(const std::vector<ScenarioReport>& reports,
                               const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["schema"] = "symmetrize-report/1";
    bool all = true;
    for (const auto& r : reports) all = all && r.pass;
    doc["pass"] = all;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(detail::report_to_json(r));
    doc["reports"] = std::move(arr);
    return doc.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out =
        "scenario,claim,backend,check,computed,expected,expected_source,pass,"
        "tolerance,seed,wall_time_ms\n";
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        out += detail::csv_escape(r.scenario) + ',' + detail::csv_escape(r.claim) + ',' +
               r.backend + ',' + detail::csv_escape(c.name) + ',' +
               detail::csv_escape(c.computed) + ',' + detail::csv_escape(c.expected) + ',' +
               c.expected_source + ',' + (c.pass ? "true" : "false") + ',' +
               format_scalar(r.tolerance) + ',' + std::to_string(r.seed) + ',' +
               std::to_string(r.wall_time_ms) + '\n';
      }
    }
    return out;
  }
  if (format == "text") {
    std::string out;
    std::size_t failed = 0;
    for (const auto& r : reports) {
      std::size_t ok = 0;
      for (const auto& c : r.checks) ok += c.pass ? 1 : 0;
      out += std::string(r.pass ? "[PASS] " : "[FAIL] ") + r.scenario + "  (claim: " + r.claim +
             ", backend: " + r.backend + ", checks: " + std::to_string(ok) + "/" +
             std::to_string(r.checks.size()) + ")\n";
      for (const auto& c : r.checks) {
        if (c.pass) continue;
        out += "    FAIL " + c.name + ": computed " + c.computed + ", expected " + c.expected +
               " [" + c.expected_source + "]\n";
      }
      if (!r.pass) ++failed;
    }
    out += std::to_string(reports.size()) + " scenario(s), " + std::to_string(failed) +
           " failed\n";
    return out;
  }
  throw BadParams("unknown report format: " + format);
}

}  // namespace sym

// Command-line front end for the scenario runner and the body constructions.
//
//   symmetrize list
//   symmetrize run <scenario>... [options]     (or: run all)
//   symmetrize body <construction> [options]
//
// Exit status: 0 when every executed check passes, 1 when any fails, 2 on
// invalid usage (unknown scenario, bad parameter, unwritable output file).

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sym/claims.hpp"
#include "sym/constructions.hpp"
#include "sym/polytope_json.hpp"
#include "sym/report.hpp"
#include "sym/scenarios.hpp"

namespace {

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sym::IoError("cannot open output file: " + path);
  out << payload;
  if (!out) throw sym::IoError("cannot write output file: " + path);
}

std::map<std::string, std::string> parse_param_flags(const std::vector<std::string>& flags) {
  std::map<std::string, std::string> params;
  for (const auto& flag : flags) {
    const auto eq = flag.find('=');
    if (eq == std::string::npos || eq == 0)
      throw sym::BadParams("--param expects key=value, got: " + flag);
    params[flag.substr(0, eq)] = flag.substr(eq + 1);
  }
  return params;
}

int run_command(std::vector<std::string> names, const sym::ScenarioOptions& options,
                const std::string& format, const std::string& out_path,
                const std::string& plot_path, unsigned jobs) {
  // "all" expands to the full registry; otherwise validate the ids up front.
  if (names.size() == 1 && names[0] == "all") names = sym::scenario_names();
  for (const auto& name : names) sym::scenario_claim(name);

  // Reports are assembled in scenario-id order regardless of the order the
  // names were given or the order parallel workers finish, so the emitted
  // document is byte-identical across runs.
  std::sort(names.begin(), names.end());

  if (!plot_path.empty() &&
      std::find(names.begin(), names.end(), "alpha-beta-region") == names.end())
    throw sym::BadParams("--plot is only available when running alpha-beta-region");

  std::vector<sym::ScenarioReport> reports(names.size());
  std::vector<std::exception_ptr> errors(names.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(names.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      try {
        reports[i] = sym::run_scenario(names[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < names.size(); i = next.fetch_add(1)) {
          try {
            reports[i] = sym::run_scenario(names[i], options);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  write_output(out_path, sym::emit_report(reports, format));

  if (!plot_path.empty()) {
    const int n = static_cast<int>(
        options.params.count("n") ? std::stoll(options.params.at("n")) : 2);
    std::vector<double> grid;
    const std::string grid_text = options.params.count("s_grid")
                                      ? options.params.at("s_grid")
                                      : "1,1.2,1.4,1.5,1.6,1.7,1.8,1.9,2";
    std::size_t start = 0;
    while (start < grid_text.size()) {
      const auto comma = grid_text.find(',', start);
      const auto item = grid_text.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!item.empty()) grid.push_back(sym::parse_scalar<double>(item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    std::ofstream plot(plot_path, std::ios::binary);
    if (!plot) throw sym::IoError("cannot open plot file: " + plot_path);
    plot << sym::emit_plot_data(n, grid);
    if (!plot) throw sym::IoError("cannot write plot file: " + plot_path);
  }

  for (const auto& rep : reports)
    if (!rep.pass) return 1;
  return 0;
}

int list_command() {
  for (const auto& name : sym::scenario_names()) {
    const auto& claim = sym::find_claim(sym::scenario_claim(name));
    std::cout << name << "\n    " << claim.id << ": " << claim.statement << "\n";
  }
  return 0;
}

int body_command(const std::string& spec_text, const std::string& backend, bool hrep,
                 const std::string& out_path) {
  auto spec = sym::parse_construction_spec(spec_text);
  if (!spec.backend.empty() && !backend.empty() && spec.backend != backend)
    throw sym::BadParams("construction spec and --backend disagree");
  const std::string chosen =
      !spec.backend.empty() ? spec.backend : (backend.empty() ? "approx" : backend);
  nlohmann::json doc;
  if (chosen == "exact") {
    auto p = sym::build_construction<sym::Rational>(spec);
    doc = hrep ? sym::polytope_to_json_hrep(p) : sym::polytope_to_json(p);
  } else if (chosen == "approx") {
    auto p = sym::build_construction<double>(spec);
    doc = hrep ? sym::polytope_to_json_hrep(p) : sym::polytope_to_json(p);
  } else {
    throw sym::BadParams("unknown backend: " + chosen);
  }
  write_output(out_path, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polytope symmetrization toolkit: constructions, containment "
               "factors, and scenario-based verification of their laws"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run verification scenarios");
  std::vector<std::string> names;
  run->add_option("scenario", names, "Scenario ids, or 'all'")->required();
  std::vector<std::string> param_flags;
  run->add_option("--param", param_flags, "Scenario parameter as key=value (repeatable)");
  std::string backend;
  run->add_option("--backend", backend, "Numeric backend: exact or approx")
      ->check(CLI::IsMember({"exact", "approx"}));
  double tolerance = 1e-9;
  run->add_option("--tol", tolerance, "Geometric comparison tolerance (approx backend)");
  std::uint64_t seed = 1;
  run->add_option("--seed", seed, "Seed for randomized corpora");
  std::string format = "text";
  run->add_option("--format", format, "Report format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  std::string out_path;
  run->add_option("--out", out_path, "Write the report to a file instead of stdout");
  std::string plot_path;
  run->add_option("--plot", plot_path,
                  "Write the factor-region plot table (alpha-beta-region only)");
  bool timings = false;
  run->add_flag("--timings", timings, "Record wall-clock time per scenario");
  unsigned jobs = 1;
  run->add_option("--jobs", jobs, "Run scenarios on N worker threads");

  // list
  app.add_subcommand("list", "List scenarios with the claims they verify");

  // body
  auto* body = app.add_subcommand("body", "Build a named body and print it as JSON");
  std::string spec_text;
  body->add_option("construction", spec_text,
                   "Construction spec, e.g. simplex_cap:n=2,s=3/2")
      ->required();
  std::string body_backend;
  body->add_option("--backend", body_backend, "Numeric backend: exact or approx")
      ->check(CLI::IsMember({"exact", "approx"}));
  bool hrep = false;
  body->add_flag("--hrep", hrep, "Emit the halfspace representation instead of vertices");
  std::string body_out;
  body->add_option("--out", body_out, "Write the JSON to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list")) return list_command();
    if (app.got_subcommand("body"))
      return body_command(spec_text, body_backend, hrep, body_out);
    sym::ScenarioOptions options;
    options.params = parse_param_flags(param_flags);
    options.backend = backend;
    options.tolerance = tolerance;
    options.seed = seed;
    options.timings = timings;
    return run_command(names, options, format, out_path, plot_path, jobs);
  } catch (const sym::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

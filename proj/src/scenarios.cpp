// Scenario registry: each named scenario evaluates one family of claims
// (see claims.hpp) against measured geometry and returns a ScenarioReport.
// Everything here is deterministic for fixed options.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sym/claims.hpp"
#include "sym/constructions.hpp"
#include "sym/containment.hpp"
#include "sym/formulas.hpp"
#include "sym/means.hpp"
#include "sym/scenarios.hpp"

namespace sym {
namespace {

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Option plumbing.

void expect_params(const ScenarioOptions& o, std::initializer_list<const char*> keys) {
  for (const auto& [key, value] : o.params) {
    bool known = false;
    for (const char* k : keys)
      if (key == k) known = true;
    if (!known) throw BadParams("scenario does not take parameter " + key);
  }
}

std::string param_or(const ScenarioOptions& o, const std::string& key,
                     const std::string& fallback) {
  auto it = o.params.find(key);
  return it == o.params.end() ? fallback : it->second;
}

long long param_int(const ScenarioOptions& o, const std::string& key, long long fallback) {
  auto it = o.params.find(key);
  if (it == o.params.end()) return fallback;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw BadParams("");
    return v;
  } catch (const std::exception&) {
    throw BadParams("parameter " + key + " is not an integer");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    const auto comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<int> param_int_list(const ScenarioOptions& o, const std::string& key,
                                const std::string& fallback) {
  std::vector<int> out;
  for (const auto& item : split_list(param_or(o, key, fallback))) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw BadParams("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw BadParams("parameter " + key + " must be a comma-separated integer list");
    }
  }
  if (out.empty()) throw BadParams("parameter " + key + " must not be empty");
  return out;
}

template <typename S>
std::vector<S> param_scalar_list(const ScenarioOptions& o, const std::string& key,
                                 const std::string& fallback) {
  std::vector<S> out;
  for (const auto& item : split_list(param_or(o, key, fallback))) {
    try {
      out.push_back(parse_scalar<S>(item));
    } catch (const std::exception&) {
      throw BadParams("parameter " + key + " must be a comma-separated number list");
    }
  }
  if (out.empty()) throw BadParams("parameter " + key + " must not be empty");
  return out;
}

enum class BackendKind { Exact, Approx };

BackendKind resolve_backend(const ScenarioOptions& o, ScenarioReport& rep, BackendKind fallback,
                            bool exact_ok, bool approx_ok) {
  BackendKind kind = fallback;
  if (!o.backend.empty()) {
    if (o.backend == "exact")
      kind = BackendKind::Exact;
    else if (o.backend == "approx")
      kind = BackendKind::Approx;
    else
      throw BadParams("unknown backend: " + o.backend);
  }
  if (kind == BackendKind::Exact && !exact_ok)
    throw BadParams("scenario " + rep.scenario + " only runs on the approx backend");
  if (kind == BackendKind::Approx && !approx_ok)
    throw BadParams("scenario " + rep.scenario + " only runs on the exact backend");
  rep.backend = kind == BackendKind::Exact ? "exact" : "approx";
  return kind;
}

// Comparison tolerance against closed forms: exact backend demands equality,
// the floating backend is floored at the report tolerance.
double form_tol(const ScenarioOptions& o, bool exact) {
  return exact ? 0.0 : std::max(o.tolerance, kReportTolerance);
}

// ---------------------------------------------------------------------------
// Check builders.

void add_check(ScenarioReport& rep, std::string name, std::string computed,
               std::string expected, std::string source, bool pass) {
  rep.checks.push_back(
      {std::move(name), std::move(computed), std::move(expected), std::move(source), pass});
}

template <typename S>
void check_value(ScenarioReport& rep, const std::string& name, const S& computed,
                 const S& expected, const char* source, double tol) {
  bool pass;
  if (is_exact_v<S> && tol == 0.0)
    pass = computed == expected;
  else
    pass = std::fabs(to_double(computed) - to_double(expected)) <= tol;
  add_check(rep, name, format_scalar(computed), format_scalar(expected), source, pass);
}

template <typename S>
void check_upper(ScenarioReport& rep, const std::string& name, const S& computed,
                 const S& bound, const char* source, double tol) {
  bool pass;
  if (is_exact_v<S> && tol == 0.0)
    pass = computed <= bound;
  else
    pass = to_double(computed) <= to_double(bound) + tol;
  add_check(rep, name, format_scalar(computed), "<= " + format_scalar(bound), source, pass);
}

template <typename S>
void check_lower(ScenarioReport& rep, const std::string& name, const S& computed,
                 const S& bound, const char* source, double tol) {
  bool pass;
  if (is_exact_v<S> && tol == 0.0)
    pass = computed >= bound;
  else
    pass = to_double(computed) >= to_double(bound) - tol;
  add_check(rep, name, format_scalar(computed), ">= " + format_scalar(bound), source, pass);
}

void check_bool(ScenarioReport& rep, const std::string& name, bool computed, bool expected,
                const char* source) {
  add_check(rep, name, computed ? "true" : "false", expected ? "true" : "false", source,
            computed == expected);
}

// Body-level work that throws is reported as a failing check instead of
// crashing the whole run.
template <typename Fn>
void guarded(ScenarioReport& rep, const std::string& label, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    add_check(rep, label + "/evaluation", std::string("error: ") + e.what(), "completes",
              "trivial", false);
  }
}

// Seeded nonzero lattice directions, identical across backends.
template <typename S>
std::vector<Vec<S>> seeded_directions(std::size_t n, std::size_t count, std::mt19937_64& rng) {
  std::vector<Vec<S>> dirs;
  while (dirs.size() < count) {
    Vec<S> d(n);
    bool nonzero = false;
    for (auto& x : d) {
      const int k = static_cast<int>(rng() % 2001) - 1000;
      x = S(k) / S(1000);
      if (k != 0) nonzero = true;
    }
    if (nonzero) dirs.push_back(std::move(d));
  }
  return dirs;
}

std::string random_label(std::size_t n, std::size_t m, std::uint64_t seed) {
  return "random_centered_polytope:n=" + std::to_string(n) + ",m=" + std::to_string(m) +
         ",seed=" + std::to_string(seed);
}

// ---------------------------------------------------------------------------
// firey-chain: nesting of the four symmetrizations plus the forward and
// reverse gauge chains on a mixed constructed/random corpus.

template <typename S>
void fill_firey_chain(ScenarioReport& rep, const ScenarioOptions& o) {
  const long long count = param_int(o, "count", 3);
  const long long dirs = param_int(o, "dirs", 25);
  if (count < 0 || count > 64) throw BadParams("count must lie in [0, 64]");
  if (dirs < 1 || dirs > 100000) throw BadParams("dirs must lie in [1, 100000]");
  const double slack_tol = is_exact_v<S> ? 0.0 : o.tolerance;
  rep.tolerance = slack_tol;

  std::mt19937_64 rng(o.seed);

  struct Entry {
    std::string label;
    Polytope<S> body;
  };
  std::vector<Entry> corpus;
  corpus.push_back({"simplex_cap:n=2,s=3/2", simplex_cap<S>(2, S(3) / S(2))});
  corpus.push_back({"beta_hexagon:s=7/5", beta_hexagon<S>(S(7) / S(5))});
  corpus.push_back({"truncated_hexagon:s=8/5", truncated_hexagon<S>(S(8) / S(5))});
  if constexpr (is_exact_v<S>)
    corpus.push_back({"rational_simplex:n=3", rational_simplex<S>(3)});
  else
    corpus.push_back({"regular_simplex:n=3", regular_simplex<S>(3)});
  for (long long i = 0; i < count; ++i) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
    corpus.push_back({random_label(2, 6, seed), random_centered_polytope<S>(2, 6, seed)});
  }
  for (long long i = 0; i < count; ++i) {
    const std::uint64_t seed = o.seed + 100 + static_cast<std::uint64_t>(i);
    const std::size_t m = 5 + static_cast<std::size_t>(i % 2);
    corpus.push_back({random_label(3, m, seed), random_centered_polytope<S>(3, m, seed)});
  }

  for (const auto& entry : corpus) {
    guarded(rep, entry.label, [&] {
      // The scaled reverse chain is stated for the Minkowski-centered position.
      const auto asym = minkowski_asymmetry(entry.body);
      const S s = asym.s;
      auto centered = translate(entry.body, vec_neg(asym.center));
      auto b = four_symmetrizations(centered);  // throws if the nesting fails
      add_check(rep, entry.label + "/nesting", "nested", "nested", "trivial", true);

      const auto xs = seeded_directions<S>(entry.body.dim, static_cast<std::size_t>(dirs), rng);
      double worst_forward = 0, worst_reverse = 0;
      bool first = true;
      const S half_plus = (s + S(1)) / S(2);
      for (const auto& x : xs) {
        const S g_max = gauge(b.maximum, x);
        const S g_arith = gauge(b.arithmetic, x);
        const S g_harm = gauge(b.harmonic, x);
        const S g_min = gauge(b.minimum, x);
        const S fwd1 = g_arith - g_max;
        const S fwd2 = g_harm - g_arith;
        const S fwd3 = g_min - g_harm;
        const S mid = half_plus * g_arith;
        const S rev1 = mid - g_min;
        const S scaled_max = s * g_max;
        const S rev2 = scaled_max - mid;
        const double f = std::min({to_double(fwd1), to_double(fwd2), to_double(fwd3)});
        const double r = std::min(to_double(rev1), to_double(rev2));
        worst_forward = first ? f : std::min(worst_forward, f);
        worst_reverse = first ? r : std::min(worst_reverse, r);
        first = false;
      }
      add_check(rep, entry.label + "/forward-gauge-chain",
                "min slack " + format_scalar(worst_forward),
                ">= " + format_scalar(-slack_tol), "closed-form", worst_forward >= -slack_tol);
      add_check(rep, entry.label + "/reverse-gauge-chain",
                "min slack " + format_scalar(worst_reverse),
                ">= " + format_scalar(-slack_tol), "closed-form", worst_reverse >= -slack_tol);
    });
  }
}

// ---------------------------------------------------------------------------
// thm11-equivalence: the two optimality booleans agree on every pair.

template <typename S>
void fill_equivalence(ScenarioReport& rep, const ScenarioOptions& o) {
  const long long count = param_int(o, "count", 8);
  if (count < 0 || count > 256) throw BadParams("count must lie in [0, 256]");
  rep.tolerance = 0.0;

  struct Entry {
    std::string label;
    Polytope<S> k;
    Polytope<S> c;
  };
  std::vector<Entry> pairs;
  auto sym_pair = [&](const std::string& label, Polytope<S> c) {
    Polytope<S> n = negate(c);
    pairs.push_back({label, std::move(c), std::move(n)});
  };
  sym_pair("simplex_cap:n=2,s=3/2", simplex_cap<S>(2, S(3) / S(2)));
  sym_pair("beta_hexagon:s=6/5", beta_hexagon<S>(S(6) / S(5)));
  sym_pair("truncated_hexagon:s=8/5", truncated_hexagon<S>(S(8) / S(5)));
  if constexpr (is_exact_v<S>)
    sym_pair("rational_simplex:n=3", rational_simplex<S>(3));
  else
    sym_pair("regular_simplex:n=3", regular_simplex<S>(3));
  for (long long i = 0; i < count; ++i) {
    const std::uint64_t sk = o.seed + static_cast<std::uint64_t>(2 * i);
    const std::uint64_t sc = o.seed + static_cast<std::uint64_t>(2 * i + 1);
    pairs.push_back({random_label(2, 6, sk) + " vs " + random_label(2, 5, sc),
                     random_centered_polytope<S>(2, 6, sk),
                     random_centered_polytope<S>(2, 5, sc)});
  }

  for (const auto& entry : pairs) {
    guarded(rep, entry.label, [&] {
      const auto eq = check_equivalence(entry.k, entry.c);
      const std::string computed = std::string("(") + (eq.first ? "true" : "false") + ", " +
                                   (eq.second ? "true" : "false") + ")";
      add_check(rep, entry.label + "/booleans-agree", computed, "both equal", "closed-form",
                eq.first == eq.second);
    });
  }
}

// ---------------------------------------------------------------------------
// simplex-means: the even-dimension shrink factors and the odd-dimension
// optimal chain.

template <typename S>
void fill_simplex_means(ScenarioReport& rep, const ScenarioOptions& o) {
  const auto dims = param_int_list(o, "dims", "2,3,4");
  const double tol = form_tol(o, is_exact_v<S>);
  rep.tolerance = tol;

  for (const int n : dims) {
    if (n < 2 || n > 4) throw BadParams("dims must lie in [2, 4]");
    Polytope<S> sx = [&] {
      if constexpr (is_exact_v<S>)
        return rational_simplex<S>(n);
      else
        return regular_simplex<S>(n);
    }();
    const std::string label =
        (is_exact_v<S> ? std::string("rational_simplex:n=") : std::string("regular_simplex:n=")) +
        std::to_string(n);
    guarded(rep, label, [&] {
      const S alpha = measure_alpha(sx).value;
      const S beta = measure_beta(sx).value;
      if (n % 2 == 0) {
        const S alpha_expect = S(n) / S(n + 1);
        const S beta_expect = S(n * (n + 2)) / S((n + 1) * (n + 1));
        check_value<S>(rep, label + "/alpha", alpha, alpha_expect, "closed-form", tol);
        check_value<S>(rep, label + "/beta", beta, beta_expect, "closed-form", tol);
      } else {
        const S one(1);
        check_value<S>(rep, label + "/alpha", alpha, one, "closed-form", tol);
        check_value<S>(rep, label + "/beta", beta, one, "closed-form", tol);
        const auto eq = check_equivalence(sx, negate(sx));
        check_bool(rep, label + "/min-in-max-optimal", eq.first, true, "closed-form");
        check_bool(rep, label + "/harm-in-arith-optimal", eq.second, true, "closed-form");
      }
    });
  }
}

// ---------------------------------------------------------------------------
// reverse-factors: the predicted factor record plus measured optimality of
// the six reverse containments.

template <typename S>
void fill_reverse_factors(ScenarioReport& rep, const ScenarioOptions& o) {
  const long long count = param_int(o, "count", 5);
  if (count < 0 || count > 64) throw BadParams("count must lie in [0, 64]");
  const auto dims = param_int_list(o, "dims", "2");
  const double tol = form_tol(o, is_exact_v<S>);
  rep.tolerance = tol;

  // Record checks: all ones at s=1, the pinned values at s=2, and the chain
  // composition identity.
  {
    const S one(1);
    auto r1 = reverse_factors<S>(one);
    bool all_one = true;
    for (const auto& [key, value] : r1) all_one = all_one && value == one;
    add_check(rep, "record/all-one-at-s-1", all_one ? "all 1" : "not all 1", "all 1", "trivial",
              all_one);

    const S two(2);
    auto r2 = reverse_factors<S>(two);
    const std::map<std::string, S> expect2 = {
        {"max_in_min", S(2)},          {"max_in_arith", S(4) / S(3)},
        {"harm_in_min", S(4) / S(3)},  {"arith_in_min", S(3) / S(2)},
        {"max_in_harm", S(3) / S(2)},  {"arith_in_harm", S(3) / S(2)},
    };
    bool match2 = true;
    for (const auto& [key, value] : expect2) match2 = match2 && r2.at(key) == value;
    add_check(rep, "record/pinned-values-at-s-2", match2 ? "match" : "mismatch",
              "(2, 4/3, 4/3, 3/2, 3/2, 3/2)", "closed-form", match2);

    bool compose = true;
    for (const auto& sv : {S(13) / S(10), S(2), S(27) / S(10)}) {
      const S left = S(2) * sv / (sv + S(1));
      const S right = (sv + S(1)) / S(2);
      const S product = left * right;
      if (is_exact_v<S>)
        compose = compose && product == sv;
      else
        compose = compose && std::fabs(to_double(product) - to_double(sv)) <= 1e-12;
    }
    add_check(rep, "record/chain-composition", compose ? "2s/(s+1) * (s+1)/2 = s" : "broken",
              "2s/(s+1) * (s+1)/2 = s", "trivial", compose);
  }

  struct Entry {
    std::string label;
    Polytope<S> body;
  };
  std::vector<Entry> corpus;
  corpus.push_back({"simplex_cap:n=2,s=3/2", simplex_cap<S>(2, S(3) / S(2))});
  corpus.push_back({"beta_hexagon:s=7/5", beta_hexagon<S>(S(7) / S(5))});
  for (const int n : dims) {
    if (n < 2 || n > 3) throw BadParams("dims must lie in [2, 3]");
    for (long long i = 0; i < count; ++i) {
      const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(1000 * n + i);
      const std::size_t m =
          n == 2 ? 5 + static_cast<std::size_t>(i % 4) : 5 + static_cast<std::size_t>(i % 2);
      corpus.push_back({random_label(static_cast<std::size_t>(n), m, seed),
                        random_centered_polytope<S>(static_cast<std::size_t>(n), m, seed)});
    }
  }

  static const char* kFive[] = {"max_in_min", "max_in_arith", "harm_in_min", "arith_in_min",
                                "max_in_harm"};
  for (const auto& entry : corpus) {
    guarded(rep, entry.label, [&] {
      auto rf = verify_reverse_factors(entry.body);
      double worst = 0;
      bool optimal = true;
      for (const char* key : kFive) {
        const auto& check = rf.at(key);
        worst = std::max(worst,
                         std::fabs(to_double(check.measured) - to_double(check.expected)));
        optimal = optimal && check.optimal;
      }
      add_check(rep, entry.label + "/five-factors-at-closed-form",
                "max deviation " + format_scalar(worst), "<= " + format_scalar(tol),
                "closed-form", worst <= tol);
      check_bool(rep, entry.label + "/five-optimal", optimal, true, "closed-form");
      const auto& sixth = rf.at("arith_in_harm");
      check_upper<S>(rep, entry.label + "/sixth-bounded", sixth.measured, sixth.expected,
                     "closed-form", tol);
    });
  }
}

// ---------------------------------------------------------------------------
// golden-house: threshold asymmetry, witness, optimal chain.

void fill_golden_house(ScenarioReport& rep, const ScenarioOptions& o) {
  const auto dims = param_int_list(o, "dims", "2,3,4");
  const auto eq_dims = param_int_list(o, "equivalence_dims", "2,3");
  const double tol = form_tol(o, false);
  rep.tolerance = tol;

  for (const int n : dims) {
    if (n < 2 || n > 6) throw BadParams("dims must lie in [2, 6]");
    const std::string label = "golden_house:n=" + std::to_string(n);
    guarded(rep, label, [&] {
      auto gh = golden_house<double>(n);
      check_value<double>(rep, label + "/asymmetry", minkowski_asymmetry(gh).s, gamma1(n),
                          "closed-form", tol);
      check_bool(rep, label + "/parallel-support-witness",
                 parallel_support_witness(gh).has_value(), true, "closed-form");
    });
  }
  for (const int n : eq_dims) {
    if (n < 2 || n > 4) throw BadParams("equivalence_dims must lie in [2, 4]");
    const std::string label = "golden_house:n=" + std::to_string(n);
    guarded(rep, label, [&] {
      auto gh = golden_house<double>(n);
      const auto eq = check_equivalence(gh, negate(gh));
      check_bool(rep, label + "/min-in-max-optimal", eq.first, true, "closed-form");
      check_bool(rep, label + "/harm-in-arith-optimal", eq.second, true, "closed-form");
    });
  }
}

// ---------------------------------------------------------------------------
// stability: correction-factor identities, measured bounds near the simplex,
// and the observed crossing directions at the thresholds.

void fill_stability(ScenarioReport& rep, const ScenarioOptions& o) {
  const double tol = form_tol(o, false);
  rep.tolerance = tol;

  // Endpoint identities, exact.
  for (const int n : {2, 4}) {
    const Rational nn(n);
    const Rational psi_n = psi(n, nn);
    const Rational mu_n = mu(n, nn);
    check_value<Rational>(rep, "psi(" + std::to_string(n) + ", n) = 1", psi_n, Rational(1),
                          "closed-form", 0.0);
    check_value<Rational>(rep, "mu(" + std::to_string(n) + ", n) = 1", mu_n, Rational(1),
                          "closed-form", 0.0);
  }
  // Frozen rational samples, exact.
  {
    const Rational s(199, 100);
    const Rational psi_s = psi(2, s);
    const Rational mu_psi = mu(2, s) * psi_s;
    check_value<Rational>(rep, "psi(2, 199/100)", psi_s, Rational(11793, 9203), "derived", 0.0);
    check_value<Rational>(rep, "mu*psi(2, 199/100)", mu_psi, Rational(35379, 29302), "derived",
                          0.0);
  }

  // Measured bounds on caps just above the second threshold.
  const double g2 = gamma2(2);
  for (const double s : {g2, 1.99, 2.0}) {
    const std::string tag = "simplex_cap:n=2,s=" + format_scalar(s);
    guarded(rep, tag, [&] {
      auto cap = simplex_cap<double>(2, s);
      const double alpha = measure_alpha(cap).value;
      const double alpha_bound = psi(2, s) * 2.0 / 3.0;
      check_upper<double>(rep, tag + "/alpha-within-psi-bound", alpha, alpha_bound,
                          "closed-form", tol);
      const double beta = measure_beta(cap).value;
      const double beta_bound = mu(2, s) * psi(2, s) * 8.0 / 9.0;
      check_upper<double>(rep, tag + "/beta-within-mu-psi-bound", beta, beta_bound,
                          "closed-form", tol);
    });
  }

  // Crossing directions: the bounds pass 1 downward at their thresholds. The
  // probe above a threshold stays inside the formula domain (s <= n), so its
  // offset shrinks when the threshold sits close to the endpoint.
  const double delta = 1e-3;
  const auto above_offset = [&](int n, double t) { return std::min(delta, (n - t) / 2.0); };
  bool crossings = true;
  for (const int n : {2, 4}) {
    const double t2 = gamma2(n);
    const double below = psi(n, t2 - delta) * n / (n + 1.0);
    const double above = psi(n, t2 + above_offset(n, t2)) * n / (n + 1.0);
    check_lower<double>(rep, "alpha-bound-just-below-threshold/n=" + std::to_string(n), below,
                        1.0, "derived", 0.0);
    check_upper<double>(rep, "alpha-bound-just-above-threshold/n=" + std::to_string(n), above,
                        1.0, "derived", 0.0);
    crossings = crossings && below >= 1.0 && above <= 1.0;

    const double t3 = gamma3(n);
    const double up3 = above_offset(n, t3);
    const double bbelow =
        mu(n, t3 - delta) * psi(n, t3 - delta) * n * (n + 2.0) / ((n + 1.0) * (n + 1.0));
    const double babove =
        mu(n, t3 + up3) * psi(n, t3 + up3) * n * (n + 2.0) / ((n + 1.0) * (n + 1.0));
    check_lower<double>(rep, "beta-bound-just-below-threshold/n=" + std::to_string(n), bbelow,
                        1.0, "derived", 0.0);
    check_upper<double>(rep, "beta-bound-just-above-threshold/n=" + std::to_string(n), babove,
                        1.0, "derived", 0.0);
    crossings = crossings && bbelow >= 1.0 && babove <= 1.0;
  }
  add_check(rep, "observed-crossing-direction",
            "both bounds decrease through 1 as asymmetry passes the thresholds",
            "both bounds decrease through 1 as asymmetry passes the thresholds", "derived",
            crossings);
}

// ---------------------------------------------------------------------------
// alpha-beta-region: attaining families against their closed forms and the
// admissible region; also the source of the plot table.

void fill_region(ScenarioReport& rep, const ScenarioOptions& o) {
  const int n = static_cast<int>(param_int(o, "n", 2));
  if (n < 2 || n > 4) throw BadParams("n must lie in [2, 4]");
  const auto grid =
      param_scalar_list<double>(o, "s_grid", "1,1.2,1.4,1.5,1.6,1.7,1.8,1.9,2");
  for (const double s : grid)
    if (s < 1.0 || s > static_cast<double>(n))
      throw BadParams("s_grid values must lie in [1, n]");
  const double tol = form_tol(o, false);
  rep.tolerance = tol;

  const double g1 = gamma1(n), g2 = gamma2(n), g3 = gamma3(n);
  for (const double s : grid) {
    const std::string tag = "s=" + format_scalar(s);
    guarded(rep, tag, [&] {
      const auto bounds = alpha_beta_bounds(n, s);
      const double alpha = measure_alpha(simplex_cap<double>(n, s)).value;
      if (n == 2) {
        check_value<double>(rep, "cap-alpha/" + tag, alpha, 2.0 / (s + 1.0), "closed-form",
                            tol);
        const double beta = measure_beta(beta_hexagon<double>(s)).value;
        check_value<double>(rep, "hexagon-beta/" + tag, beta,
                            4.0 * s / ((s + 1.0) * (s + 1.0)), "closed-form", tol);
        const std::string alpha_tag = s <= g1 ? "proved-equal" : (s > g2 ? "bound-only" : "open");
        const std::string beta_tag = s <= g1 ? "proved-equal" : (s > g3 ? "bound-only" : "open");
        add_check(rep, "alpha-region-tag/" + tag, region_string(bounds.alpha_high.region),
                  alpha_tag, "trivial", region_string(bounds.alpha_high.region) == alpha_tag);
        add_check(rep, "beta-region-tag/" + tag, region_string(bounds.beta_high.region),
                  beta_tag, "trivial", region_string(bounds.beta_high.region) == beta_tag);
      } else {
        check_lower<double>(rep, "cap-alpha-above-lower/" + tag, alpha,
                            bounds.alpha_low.value, "closed-form", tol);
        check_upper<double>(rep, "cap-alpha-below-upper/" + tag, alpha,
                            bounds.alpha_high.value, "closed-form", tol);
      }
    });
  }

  if (n == 2) {
    for (const double s : {1.7, 1.9, 2.0}) {
      const std::string tag = "alpha_pentagon:s=" + format_scalar(s);
      guarded(rep, tag, [&] {
        const double alpha = measure_alpha(alpha_pentagon<double>(s)).value;
        check_value<double>(rep, tag + "/alpha", alpha, s / (s * s - 1.0), "closed-form", tol);
      });
    }
    for (const double s : {1.65, 5.0 / 3.0, 1.9}) {
      const std::string tag = "beta_pentagon:s=" + format_scalar(s);
      guarded(rep, tag, [&] {
        const double beta = measure_beta(beta_pentagon<double>(s)).value;
        const double expect =
            s <= 5.0 / 3.0 ? s / (s * s - 1.0) : 4.0 * s / ((s + 1.0) * (s + 1.0));
        check_value<double>(rep, tag + "/beta", beta, expect, "closed-form", tol);
      });
    }
  }
}

// ---------------------------------------------------------------------------
// kgon-omega: odd regular polygons attain the outer factor exactly.

void fill_kgon_omega(ScenarioReport& rep, const ScenarioOptions& o) {
  const auto ks = param_int_list(o, "ks", "3,5,7");
  const double tol = form_tol(o, false);
  rep.tolerance = tol;
  for (const int k : ks) {
    if (k < 3 || k % 2 == 0) throw BadParams("ks must be odd integers >= 3");
    const std::string label = "regular_kgon:k=" + std::to_string(k);
    guarded(rep, label, [&] {
      auto kg = regular_kgon<double>(k);
      const double s_expect = 1.0 / std::cos(kPi / k);
      check_value<double>(rep, label + "/asymmetry", minkowski_asymmetry(kg).s, s_expect,
                          "closed-form", tol);
      const double omega = measure_omega(kg).value;
      check_value<double>(rep, label + "/omega", omega, (s_expect + 1.0) / 2.0, "closed-form",
                          tol);
    });
  }
}

// ---------------------------------------------------------------------------
// nonopt-omega: the corner-trimmed hexagon stays strictly below the cap's
// outer factor while respecting the universal lower bound.

template <typename S>
void fill_nonopt_omega(ScenarioReport& rep, const ScenarioOptions& o) {
  S s(0);
  try {
    s = parse_scalar<S>(param_or(o, "s", "3/2"));
  } catch (const std::exception&) {
    throw BadParams("parameter s is not a number");
  }
  const double sd = to_double(s);
  if (sd <= 1.0 || sd >= 2.0) throw BadParams("s must lie strictly inside (1, 2)");
  const double tol = form_tol(o, is_exact_v<S>);
  rep.tolerance = tol;
  const double margin = 1e-6;

  const std::string label = "truncated_hexagon:s=" + format_scalar(s);
  guarded(rep, label, [&] {
    auto th = truncated_hexagon<S>(s);
    check_value<S>(rep, label + "/asymmetry", minkowski_asymmetry(th).s, s, "closed-form", tol);
    const S omega = measure_omega(th).value;
    if (sd == 1.5) {
      const S frozen = S(29) / S(24);
      check_value<S>(rep, label + "/omega", omega, frozen, "derived", tol);
    }
    const S lower = (s + S(1)) * (s + S(1)) / (S(4) * s);
    check_lower<S>(rep, label + "/above-universal-lower-bound", omega, lower, "closed-form",
                   tol);
    const double cap_factor = (sd + 1.0) / 2.0;
    add_check(rep, label + "/strictly-below-cap-factor", format_scalar(to_double(omega)),
              "<= " + format_scalar(cap_factor - margin), "closed-form",
              to_double(omega) <= cap_factor - margin);
    // Contrast: the cap itself attains the factor.
    const S cap_omega = measure_omega(simplex_cap<S>(2, s)).value;
    const S cap_expect = (s + S(1)) / S(2);
    check_value<S>(rep, "simplex_cap:n=2,s=" + format_scalar(s) + "/omega", cap_omega,
                   cap_expect, "closed-form", tol);
  });

  for (const S& extra : param_scalar_list<S>(o, "extra", "6/5,9/5")) {
    const double xd = to_double(extra);
    if (xd <= 1.0 || xd >= 2.0) throw BadParams("extra values must lie strictly inside (1, 2)");
    const std::string tag = "truncated_hexagon:s=" + format_scalar(extra);
    guarded(rep, tag, [&] {
      auto th = truncated_hexagon<S>(extra);
      check_value<S>(rep, tag + "/asymmetry", minkowski_asymmetry(th).s, extra, "closed-form",
                     tol);
      const S omega = measure_omega(th).value;
      const S lower = (extra + S(1)) * (extra + S(1)) / (S(4) * extra);
      check_lower<S>(rep, tag + "/above-universal-lower-bound", omega, lower, "closed-form",
                     tol);
      add_check(rep, tag + "/strictly-below-cap-factor", format_scalar(to_double(omega)),
                "< " + format_scalar((xd + 1.0) / 2.0), "closed-form",
                to_double(omega) < (xd + 1.0) / 2.0);
    });
  }
}

// ---------------------------------------------------------------------------
// descent: asymmetry reduction hits its target and keeps the chain optimal.

template <typename S>
void fill_descent(ScenarioReport& rep, const ScenarioOptions& o) {
  const double tol = form_tol(o, is_exact_v<S>);
  rep.tolerance = tol;

  Polytope<S> base = [&] {
    if constexpr (is_exact_v<S>)
      return rational_simplex<S>(3);
    else
      return golden_house<S>(2);
  }();
  const std::string base_label = is_exact_v<S> ? "rational_simplex:n=3" : "golden_house:n=2";
  const S base_s = minkowski_asymmetry(base).s;

  const auto targets =
      param_scalar_list<S>(o, "targets", is_exact_v<S> ? "2,3/2" : "1.2,1.4");
  for (const S& target : targets) {
    if (to_double(target) < 1.0 || to_double(target) > to_double(base_s))
      throw BadParams("targets must lie in [1, s(base)]");
    const std::string tag =
        base_label + " -> s_target=" + format_scalar(target);
    guarded(rep, tag, [&] {
      auto d = asymmetry_descent(base, target);
      check_value<S>(rep, tag + "/asymmetry", minkowski_asymmetry(d).s, target, "closed-form",
                     tol);
      const auto eq = check_equivalence(d, negate(d));
      check_bool(rep, tag + "/min-in-max-optimal", eq.first, true, "closed-form");
      check_bool(rep, tag + "/harm-in-arith-optimal", eq.second, true, "closed-form");
      check_bool(rep, tag + "/parallel-support-witness",
                 parallel_support_witness(d).has_value(), true, "closed-form");
    });
  }
}

// ---------------------------------------------------------------------------
// polar-optimality: optimal containment of 0-symmetric pairs survives the
// polar swap.

template <typename S>
void fill_polar_optimality(ScenarioReport& rep, const ScenarioOptions& o) {
  const long long count = param_int(o, "count", 4);
  if (count < 0 || count > 64) throw BadParams("count must lie in [0, 64]");
  rep.tolerance = 0.0;

  struct Entry {
    std::string label;
    Polytope<S> body;
  };
  std::vector<Entry> corpus;
  corpus.push_back({"simplex_cap:n=2,s=3/2", simplex_cap<S>(2, S(3) / S(2))});
  corpus.push_back({"beta_hexagon:s=7/5", beta_hexagon<S>(S(7) / S(5))});
  for (long long i = 0; i < count; ++i) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
    const std::size_t m = 5 + static_cast<std::size_t>(i % 3);
    corpus.push_back({random_label(2, m, seed), random_centered_polytope<S>(2, m, seed)});
  }
  if constexpr (!is_exact_v<S>) {
    const std::uint64_t seed = o.seed + 60;
    corpus.push_back({random_label(3, 5, seed), random_centered_polytope<S>(3, 5, seed)});
  }

  for (const auto& entry : corpus) {
    guarded(rep, entry.label, [&] {
      auto b = four_symmetrizations(entry.body);
      check_bool(rep, entry.label + "/min-in-max-polar-swap",
                 polar_optimality_check(b.minimum, b.maximum), true, "closed-form");
      check_bool(rep, entry.label + "/harm-in-arith-polar-swap",
                 polar_optimality_check(b.harmonic, b.arithmetic), true, "closed-form");
    });
  }
}

// ---------------------------------------------------------------------------
// diameters: directional diameter identities across symmetrization.

template <typename S>
void fill_diameters(ScenarioReport& rep, const ScenarioOptions& o) {
  const long long count = param_int(o, "count", is_exact_v<S> ? 4 : 10);
  if (count < 1 || count > 256) throw BadParams("count must lie in [1, 256]");
  const auto dims = param_int_list(o, "dims", is_exact_v<S> ? "2" : "2,3");
  const double tol = is_exact_v<S> ? 0.0 : o.tolerance;
  rep.tolerance = tol;

  for (const int n : dims) {
    if (n < 2 || n > 3) throw BadParams("dims must lie in [2, 3]");
    for (long long i = 0; i < count; ++i) {
      const std::uint64_t sk = o.seed + static_cast<std::uint64_t>(1000 * n + 2 * i);
      const std::uint64_t sc = sk + 1;
      const std::string label =
          random_label(static_cast<std::size_t>(n), 6, sk) + " vs " +
          random_label(static_cast<std::size_t>(n), 5, sc);
      guarded(rep, label, [&] {
        auto k = random_centered_polytope<S>(static_cast<std::size_t>(n), 6, sk);
        auto c = random_centered_polytope<S>(static_cast<std::size_t>(n), 5, sc);
        const S d_max = diameter_max(k, c);
        const S d_core = diameter(k, intersect(c, negate(c)));
        check_value<S>(rep, label + "/max-vs-symmetric-core", d_max, d_core, "closed-form",
                       tol);
        const S d_plain = diameter(k, c);
        const S d_half = diameter(k, arithmetic_mean(c, negate(c)));
        check_value<S>(rep, label + "/plain-vs-half-difference", d_plain, d_half,
                       "closed-form", tol);
      });
    }
  }
}

// ---------------------------------------------------------------------------
// random-suite: representation and certificate invariants over a seeded
// corpus.

template <typename S>
void fill_random_suite(ScenarioReport& rep, const ScenarioOptions& o) {
  const long long count = param_int(o, "count", is_exact_v<S> ? 3 : 6);
  if (count < 1 || count > 256) throw BadParams("count must lie in [1, 256]");
  const auto dims = param_int_list(o, "dims", is_exact_v<S> ? "2" : "2,3");
  const double geom_tol = form_tol(o, is_exact_v<S>);
  rep.tolerance = geom_tol;

  static const char* kFive[] = {"max_in_min", "max_in_arith", "harm_in_min", "arith_in_min",
                                "max_in_harm"};
  for (const int n : dims) {
    if (n < 2 || n > 3) throw BadParams("dims must lie in [2, 3]");
    for (long long i = 0; i < count; ++i) {
      const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(1000 * n + i);
      const std::size_t m =
          n == 2 ? 5 + static_cast<std::size_t>(i % 4) : 5 + static_cast<std::size_t>(i % 2);
      const std::string label = random_label(static_cast<std::size_t>(n), m, seed);
      guarded(rep, label, [&] {
        auto c = random_centered_polytope<S>(static_cast<std::size_t>(n), m, seed);

        auto roundtrip = make_from_hrep<S>(c.halfspaces());
        check_bool(rep, label + "/vertex-halfspace-roundtrip",
                   same_geometry(c, roundtrip, geom_tol), true, "trivial");
        check_bool(rep, label + "/bipolar-identity", same_geometry(c, polar(polar(c)), geom_tol),
                   true, "closed-form");

        const S s = minkowski_asymmetry(c).s;
        auto rf = verify_reverse_factors(c);
        double worst = 0;
        bool optimal = true;
        for (const char* key : kFive) {
          const auto& check = rf.at(key);
          worst = std::max(worst,
                           std::fabs(to_double(check.measured) - to_double(check.expected)));
          optimal = optimal && check.optimal;
        }
        add_check(rep, label + "/five-factors-at-closed-form",
                  "max deviation " + format_scalar(worst), "<= " + format_scalar(geom_tol),
                  "closed-form", worst <= geom_tol);
        check_bool(rep, label + "/five-optimal", optimal, true, "closed-form");

        const auto eq = check_equivalence(c, negate(c));
        check_bool(rep, label + "/equivalence-booleans-agree", eq.first == eq.second, true,
                   "closed-form");

        auto b = four_symmetrizations(c);
        auto outer = scale(b.minimum, s);
        auto res = is_optimally_contained(b.maximum, outer, true);
        const bool valid = res.first && res.second.has_value() &&
                           validate_certificate(*res.second, b.maximum, outer);
        check_bool(rep, label + "/certificate-revalidates", valid, true, "derived");
      });
    }
  }
}

// ---------------------------------------------------------------------------
// Registry and dispatch.

struct ScenarioEntry {
  const char* id;
  const char* claim;
  void (*fill)(ScenarioReport&, const ScenarioOptions&);
};

void scen_firey_chain(ScenarioReport& rep, const ScenarioOptions& o) {
  expect_params(o, {"count", "dirs"});
  if (resolve_backend(o, rep, BackendKind::Approx, true, true) == BackendKind::Exact)
    fill_firey_chain<Rational>(rep, o);
  else
    fill_firey_chain<double>(rep, o);
}

void scen_equivalence(ScenarioReport& rep, const ScenarioOptions& o) {
  expect_params(o, {"count"});
  if (resolve_backend(o, rep, BackendKind::Approx, true, true) == BackendKind::Exact)
    fill_equivalence<Rational>(rep, o);
  else
    fill_equivalence<double>(rep, o);
}

void scen_simplex_means(ScenarioReport& rep, const ScenarioOptions& o) {
  expect_params(o, {"dims"});
  if (resolve_backend(o, rep, BackendKind::Exact, true, true) == BackendKind::Exact)
    fill_simplex_means<Rational>(rep, o);
  else
    fill_simplex_means<double>(rep, o);
}

void scen_reverse_factors(ScenarioReport& rep, const ScenarioOptions& o) {
  expect_params(o, {"count", "dims"});
  if (resolve_backend(o, rep, BackendKind::Approx, true, true) == BackendKind::Exact)
    fill_reverse_factors<Rational>(rep, o);
  else
    fill_reverse_factors<double>(rep, o);
}

void scen_golden_house(ScenarioReport& rep, const ScenarioOptions& o) {
  expect_params(o, {"dims", "equivalence_dims"});
  resolve_backend(o, rep, BackendKind::Approx, false, true);
  fill_golden_house(rep, o);
}

void scen_stability(ScenarioReport& rep, const ScenarioOptions& o) {
  expect_params(o, {});
  resolve_backend(o, rep, BackendKind::Approx, false, true);
  fill_stability(rep, o);
}

void scen_region(ScenarioReport& rep, const ScenarioOptions& o) {
  expect_params(o, {"n", "s_grid"});
  resolve_backend(o, rep, BackendKind::Approx, false, true);
  fill_region(rep, o);
}

void scen_kgon_omega(ScenarioReport& rep, const ScenarioOptions& o) {
  expect_params(o, {"ks"});
  resolve_backend(o, rep, BackendKind::Approx, false, true);
  fill_kgon_omega(rep, o);
}

void scen_nonopt_omega(ScenarioReport& rep, const ScenarioOptions& o) {
  expect_params(o, {"s", "extra"});
  if (resolve_backend(o, rep, BackendKind::Exact, true, true) == BackendKind::Exact)
    fill_nonopt_omega<Rational>(rep, o);
  else
    fill_nonopt_omega<double>(rep, o);
}

void scen_descent(ScenarioReport& rep, const ScenarioOptions& o) {
  expect_params(o, {"targets"});
  if (resolve_backend(o, rep, BackendKind::Approx, true, true) == BackendKind::Exact)
    fill_descent<Rational>(rep, o);
  else
    fill_descent<double>(rep, o);
}

void scen_polar_optimality(ScenarioReport& rep, const ScenarioOptions& o) {
  expect_params(o, {"count"});
  if (resolve_backend(o, rep, BackendKind::Approx, true, true) == BackendKind::Exact)
    fill_polar_optimality<Rational>(rep, o);
  else
    fill_polar_optimality<double>(rep, o);
}

void scen_diameters(ScenarioReport& rep, const ScenarioOptions& o) {
  expect_params(o, {"count", "dims"});
  if (resolve_backend(o, rep, BackendKind::Approx, true, true) == BackendKind::Exact)
    fill_diameters<Rational>(rep, o);
  else
    fill_diameters<double>(rep, o);
}

void scen_random_suite(ScenarioReport& rep, const ScenarioOptions& o) {
  expect_params(o, {"count", "dims"});
  if (resolve_backend(o, rep, BackendKind::Approx, true, true) == BackendKind::Exact)
    fill_random_suite<Rational>(rep, o);
  else
    fill_random_suite<double>(rep, o);
}

// Sorted by id.
const ScenarioEntry kScenarios[] = {
    {"alpha-beta-region", "attaining-family-formulas", scen_region},
    {"descent", "descent-preserves-equivalence", scen_descent},
    {"diameters", "diameter-identities", scen_diameters},
    {"firey-chain", "mean-chain-nesting", scen_firey_chain},
    {"golden-house", "golden-house-threshold", scen_golden_house},
    {"kgon-omega", "kgon-omega-optimal", scen_kgon_omega},
    {"nonopt-omega", "omega-not-universally-optimal", scen_nonopt_omega},
    {"polar-optimality", "polar-swap-optimality", scen_polar_optimality},
    {"random-suite", "seeded-corpus-invariants", scen_random_suite},
    {"reverse-factors", "reverse-factor-table", scen_reverse_factors},
    {"simplex-means", "simplex-mean-factors", scen_simplex_means},
    {"stability", "near-simplex-stability", scen_stability},
    {"thm11-equivalence", "equivalence-two-sided", scen_equivalence},
};

const ScenarioEntry& find_scenario(const std::string& name) {
  for (const auto& entry : kScenarios)
    if (name == entry.id) return entry;
  throw UnknownScenario("unknown scenario: " + name);
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : kScenarios) out.emplace_back(entry.id);
    return out;
  }();
  return names;
}

const std::string& scenario_claim(const std::string& scenario) {
  static std::map<std::string, std::string> claims = [] {
    std::map<std::string, std::string> out;
    for (const auto& entry : kScenarios) out[entry.id] = entry.claim;
    return out;
  }();
  auto it = claims.find(scenario);
  if (it == claims.end()) throw UnknownScenario("unknown scenario: " + scenario);
  return it->second;
}

ScenarioReport run_scenario(const std::string& scenario, const ScenarioOptions& options) {
  const auto& entry = find_scenario(scenario);
  if (options.tolerance < 0) throw BadParams("tolerance must be nonnegative");
  ScenarioReport rep;
  rep.scenario = scenario;
  rep.claim = entry.claim;
  rep.seed = options.seed;
  const auto t0 = std::chrono::steady_clock::now();
  entry.fill(rep, options);
  finalize_pass(rep);
  if (options.timings) {
    rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  }
  return rep;
}

std::string emit_plot_data(int n, const std::vector<double>& s_values) {
  if (n < 2 || n > 4) throw BadParams("plot data needs a dimension in [2, 4]");
  if (s_values.empty()) throw BadParams("plot data needs at least one asymmetry value");
  for (const double s : s_values)
    if (s < 1.0 || s > static_cast<double>(n))
      throw BadParams("plot asymmetry values must lie in [1, n]");

  std::string out =
      "s,alpha_low,alpha_measured,alpha_high_bound,beta_low,beta_measured,beta_high_bound,"
      "alpha_region,beta_region\n";
  for (const double s : s_values) {
    const auto bounds = alpha_beta_bounds(n, s);
    const double alpha_measured = measure_alpha(simplex_cap<double>(n, s)).value;
    const double beta_measured = n == 2 ? measure_beta(beta_hexagon<double>(s)).value
                                        : measure_beta(simplex_cap<double>(n, s)).value;
    out += format_scalar(s) + ',' + format_scalar(bounds.alpha_low.value) + ',' +
           format_scalar(alpha_measured) + ',' + format_scalar(bounds.alpha_high.value) + ',' +
           format_scalar(bounds.beta_low.value) + ',' + format_scalar(beta_measured) + ',' +
           format_scalar(bounds.beta_high.value) + ',' +
           region_string(bounds.alpha_high.region) + ',' +
           region_string(bounds.beta_high.region) + '\n';
  }
  return out;
}

}  // namespace sym

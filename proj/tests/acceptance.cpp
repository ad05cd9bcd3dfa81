// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are fixed here on purpose; loosening them is
// not a valid way to make this suite pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sym/claims.hpp"
#include "sym/constructions.hpp"
#include "sym/containment.hpp"
#include "sym/formulas.hpp"
#include "sym/means.hpp"
#include "sym/report.hpp"
#include "sym/scenarios.hpp"

using namespace sym;

namespace {

constexpr double kTolReport = 1e-7;   // closed-form comparisons
constexpr double kTolOmegaKgon = 1e-6;
constexpr double kTolDiameter = 1e-9;
constexpr double kTolSlack = 1e-9;    // gauge-chain slack
constexpr double kTolGeometry = 1e-9; // representation round-trips

struct Outcome {
  bool pass = true;
  std::string detail;
  int checks = 0;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    ++checks;
    if (!ok) fail(why);
  }
};

std::string fmt(double x) { return format_scalar(x); }

void expect_close(Outcome& out, const std::string& what, double measured, double expected,
                  double tol) {
  out.expect(std::fabs(measured - expected) <= tol,
             what + ": measured " + fmt(measured) + ", expected " + fmt(expected));
}

struct Body {
  std::string label;
  Polytope<double> poly;
};

// Shared seeded corpus: 60 planar and 40 three-dimensional Minkowski-centered
// random polytopes. Built once, reused by several criteria.
const std::vector<Body>& random_corpus() {
  static const std::vector<Body> corpus = [] {
    std::vector<Body> out;
    for (int i = 0; i < 60; ++i) {
      const std::uint64_t seed = 7000 + i;
      const std::size_t m = 5 + static_cast<std::size_t>(i % 4);
      out.push_back({"random(n=2,m=" + std::to_string(m) + ",seed=" + std::to_string(seed) + ")",
                     random_centered_polytope<double>(2, m, seed)});
    }
    for (int i = 0; i < 40; ++i) {
      const std::uint64_t seed = 8000 + i;
      const std::size_t m = 5 + static_cast<std::size_t>(i % 2);
      out.push_back({"random(n=3,m=" + std::to_string(m) + ",seed=" + std::to_string(seed) + ")",
                     random_centered_polytope<double>(3, m, seed)});
    }
    return out;
  }();
  return corpus;
}

// Constructed bodies used by the nesting/equivalence criteria.
std::vector<Body> constructed_corpus() {
  std::vector<Body> out;
  out.push_back({"simplex_cap(2,1.2)", simplex_cap<double>(2, 1.2)});
  out.push_back({"simplex_cap(2,1.5)", simplex_cap<double>(2, 1.5)});
  out.push_back({"simplex_cap(2,2)", simplex_cap<double>(2, 2.0)});
  out.push_back({"simplex_cap(3,2.5)", simplex_cap<double>(3, 2.5)});
  out.push_back({"beta_hexagon(1.2)", beta_hexagon<double>(1.2)});
  out.push_back({"beta_hexagon(1.5)", beta_hexagon<double>(1.5)});
  out.push_back({"alpha_pentagon(1.7)", alpha_pentagon<double>(1.7)});
  out.push_back({"alpha_pentagon(1.9)", alpha_pentagon<double>(1.9)});
  out.push_back({"beta_pentagon(1.65)", beta_pentagon<double>(1.65)});
  out.push_back({"beta_pentagon(1.9)", beta_pentagon<double>(1.9)});
  out.push_back({"truncated_hexagon(1.5)", truncated_hexagon<double>(1.5)});
  out.push_back({"regular_simplex(3)", regular_simplex<double>(3)});
  out.push_back({"regular_kgon(5)", regular_kgon<double>(5)});
  out.push_back({"golden_house(2)", golden_house<double>(2)});
  out.push_back({"golden_house(3)", golden_house<double>(3)});
  return out;
}

// ---------------------------------------------------------------------------
// 1. Exact simplex asymmetry in dimensions 2..5.

Outcome criterion_simplex_asymmetry() {
  Outcome out;
  for (int n = 2; n <= 5; ++n) {
    const Rational s = minkowski_asymmetry(rational_simplex<Rational>(n)).s;
    out.expect(s == Rational(n), "s(rational_simplex(" + std::to_string(n) + ")) = " +
                                     format_scalar(s) + ", expected " + std::to_string(n));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 2. Simplex mean factors: exact in even dimension, floating within 1e-7,
//    and the optimal odd-dimensional chain.

Outcome criterion_simplex_mean_factors() {
  Outcome out;
  for (const int n : {2, 4}) {
    auto sx = rational_simplex<Rational>(n);
    const Rational alpha = measure_alpha(sx).value;
    const Rational beta = measure_beta(sx).value;
    const Rational alpha_want = Rational(n) / Rational(n + 1);
    const Rational beta_want = Rational(n * (n + 2)) / Rational((n + 1) * (n + 1));
    out.expect(alpha == alpha_want, "exact alpha(simplex_" + std::to_string(n) + ") = " +
                                        format_scalar(alpha));
    out.expect(beta == beta_want,
               "exact beta(simplex_" + std::to_string(n) + ") = " + format_scalar(beta));

    auto rx = regular_simplex<double>(n);
    expect_close(out, "alpha(regular_simplex(" + std::to_string(n) + "))",
                 measure_alpha(rx).value, static_cast<double>(n) / (n + 1), kTolReport);
    expect_close(out, "beta(regular_simplex(" + std::to_string(n) + "))",
                 measure_beta(rx).value,
                 static_cast<double>(n) * (n + 2) / ((n + 1.0) * (n + 1.0)), kTolReport);
  }
  {
    auto sx = regular_simplex<double>(3);
    const auto eq = check_equivalence(sx, negate(sx));
    out.expect(eq.first && eq.second, "three-dimensional simplex chain is not optimal");
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3. Reverse containment factors on the random corpus, plus tightness of the
//    outer factor on caps over the half-step asymmetry grid.

Outcome criterion_reverse_factors() {
  Outcome out;
  static const char* kFive[] = {"max_in_min", "max_in_arith", "harm_in_min", "arith_in_min",
                                "max_in_harm"};
  for (const auto& body : random_corpus()) {
    auto rf = verify_reverse_factors(body.poly);
    for (const char* key : kFive) {
      const auto& check = rf.at(key);
      out.expect(std::fabs(check.measured - check.expected) <= kTolReport &&
                     check.optimal,
                 body.label + "/" + key + ": measured " + fmt(check.measured) +
                     ", expected " + fmt(check.expected) +
                     (check.optimal ? "" : " (not optimal)"));
    }
    const auto& sixth = rf.at("arith_in_harm");
    out.expect(sixth.measured <= sixth.expected + kTolReport,
               body.label + "/arith_in_harm exceeds (s+1)/2: " + fmt(sixth.measured));
  }
  for (const int n : {2, 3}) {
    for (double s = 1.0; s <= n + 1e-12; s += 0.5) {
      const double omega = measure_omega(simplex_cap<double>(n, s)).value;
      expect_close(out,
                   "omega(simplex_cap(" + std::to_string(n) + "," + fmt(s) + "))", omega,
                   (s + 1.0) / 2.0, kTolReport);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 4. The two optimality booleans agree on every pair, random and constructed.

Outcome criterion_equivalence_agreement() {
  Outcome out;
  for (const auto& body : random_corpus()) {
    const auto eq = check_equivalence(body.poly, negate(body.poly));
    out.expect(eq.first == eq.second, body.label + ": booleans disagree");
  }
  for (const auto& body : constructed_corpus()) {
    const auto eq = check_equivalence(body.poly, negate(body.poly));
    out.expect(eq.first == eq.second, body.label + ": booleans disagree");
  }
  for (int i = 0; i < 10; ++i) {
    auto k = random_centered_polytope<double>(2, 6, 9000 + 2 * i);
    auto c = random_centered_polytope<double>(2, 5, 9001 + 2 * i);
    const auto eq = check_equivalence(k, c);
    out.expect(eq.first == eq.second,
               "pair seeds (" + std::to_string(9000 + 2 * i) + "," +
                   std::to_string(9001 + 2 * i) + "): booleans disagree");
  }
  return out;
}

// ---------------------------------------------------------------------------
// 5. House bodies: threshold asymmetry, support witness, and descent.

Outcome criterion_golden_house() {
  Outcome out;
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  expect_close(out, "s(golden_house(2))", minkowski_asymmetry(golden_house<double>(2)).s,
               golden, kTolReport);
  for (const int n : {2, 3, 4}) {
    auto gh = golden_house<double>(n);
    expect_close(out, "s(golden_house(" + std::to_string(n) + ")) vs threshold",
                 minkowski_asymmetry(gh).s, gamma1(n), kTolReport);
    out.expect(parallel_support_witness(gh).has_value(),
               "golden_house(" + std::to_string(n) + ") has no parallel support witness");
  }
  for (const double target : {1.2, 1.4}) {
    auto d = asymmetry_descent(golden_house<double>(2), target);
    expect_close(out, "descent target " + fmt(target), minkowski_asymmetry(d).s, target,
                 kTolReport);
    const auto eq = check_equivalence(d, negate(d));
    out.expect(eq.first && eq.second,
               "descent to " + fmt(target) + " lost the optimal chain");
  }
  return out;
}

// ---------------------------------------------------------------------------
// 6. Attaining families against their closed forms.

Outcome criterion_attaining_families() {
  Outcome out;
  for (const double s : {1.2, 1.5, 2.0})
    expect_close(out, "alpha(simplex_cap(2," + fmt(s) + "))",
                 measure_alpha(simplex_cap<double>(2, s)).value, 2.0 / (s + 1.0), kTolReport);
  for (const double s : {1.7, 1.9, 2.0})
    expect_close(out, "alpha(alpha_pentagon(" + fmt(s) + "))",
                 measure_alpha(alpha_pentagon<double>(s)).value, s / (s * s - 1.0),
                 kTolReport);
  for (const double s : {1.2, 1.5, 2.0})
    expect_close(out, "beta(beta_hexagon(" + fmt(s) + "))",
                 measure_beta(beta_hexagon<double>(s)).value, 4.0 * s / ((s + 1.0) * (s + 1.0)),
                 kTolReport);
  for (const double s : {1.65, 5.0 / 3.0, 1.9}) {
    const double expected =
        s <= 5.0 / 3.0 ? s / (s * s - 1.0) : 4.0 * s / ((s + 1.0) * (s + 1.0));
    expect_close(out, "beta(beta_pentagon(" + fmt(s) + "))",
                 measure_beta(beta_pentagon<double>(s)).value, expected, kTolReport);
  }
  return out;
}

// ---------------------------------------------------------------------------
// 7. Outer factor: tight on odd polygons, strictly loose on the trimmed
//    hexagon while respecting the universal lower bound.

Outcome criterion_omega_families() {
  Outcome out;
  for (const int k : {3, 5, 7}) {
    const double s = 1.0 / std::cos(3.14159265358979323846 / k);
    expect_close(out, "omega(regular_kgon(" + std::to_string(k) + "))",
                 measure_omega(regular_kgon<double>(k)).value, (s + 1.0) / 2.0, kTolOmegaKgon);
  }
  const double omega = measure_omega(truncated_hexagon<double>(1.5)).value;
  out.expect(omega >= 25.0 / 24.0 - kTolReport && omega <= 1.25 - 1e-6,
             "omega(truncated_hexagon(1.5)) = " + fmt(omega) +
                 ", expected in [25/24, 1.25 - 1e-6]");
  return out;
}

// ---------------------------------------------------------------------------
// 8. Stability near the simplex: measured factors under the correction
//    bounds, and the exact endpoint identities of the correction factors.

Outcome criterion_stability() {
  Outcome out;
  for (const double s : {gamma2(2), 1.99, 2.0}) {
    auto cap = simplex_cap<double>(2, s);
    const double alpha = measure_alpha(cap).value;
    const double alpha_bound = psi(2, s) * 2.0 / 3.0;
    out.expect(alpha <= alpha_bound + kTolReport,
               "alpha(simplex_cap(2," + fmt(s) + ")) = " + fmt(alpha) + " above bound " +
                   fmt(alpha_bound));
    const double beta = measure_beta(cap).value;
    const double beta_bound = mu(2, s) * psi(2, s) * 8.0 / 9.0;
    out.expect(beta <= beta_bound + kTolReport, "beta(simplex_cap(2," + fmt(s) + ")) = " +
                                                    fmt(beta) + " above bound " +
                                                    fmt(beta_bound));
  }
  for (const int n : {2, 4}) {
    out.expect(psi(n, Rational(n)) == Rational(1),
               "psi(" + std::to_string(n) + ", n) != 1 exactly");
    out.expect(mu(n, Rational(n)) == Rational(1),
               "mu(" + std::to_string(n) + ", n) != 1 exactly");
  }
  return out;
}

// ---------------------------------------------------------------------------
// 9. Nesting of the four means and both gauge chains on the full corpus.

Outcome criterion_gauge_chains() {
  Outcome out;
  std::mt19937_64 rng(424242);
  auto corpus = constructed_corpus();
  corpus.push_back({"golden_house(4)", golden_house<double>(4)});
  for (const auto& body : random_corpus()) corpus.push_back(body);

  for (const auto& body : corpus) {
    const auto asym = minkowski_asymmetry(body.poly);
    auto centered = translate(body.poly, vec_neg(asym.center));
    const double s = asym.s;
    MeansBundle<double> b = four_symmetrizations(centered);  // nesting checked inside
    ++out.checks;

    double worst = 0;
    for (int d = 0; d < 100; ++d) {
      Vec<double> x(centered.dim);
      bool nonzero = false;
      for (auto& xi : x) {
        const int k = static_cast<int>(rng() % 2001) - 1000;
        xi = k / 1000.0;
        nonzero = nonzero || k != 0;
      }
      if (!nonzero) {
        --d;
        continue;
      }
      const double g_max = gauge(b.maximum, x);
      const double g_arith = gauge(b.arithmetic, x);
      const double g_harm = gauge(b.harmonic, x);
      const double g_min = gauge(b.minimum, x);
      const double mid = (s + 1.0) / 2.0 * g_arith;
      worst = std::min({worst, g_arith - g_max, g_harm - g_arith, g_min - g_harm,
                        mid - g_min, s * g_max - mid});
    }
    out.expect(worst >= -kTolSlack,
               body.label + ": gauge chain slack " + fmt(worst) + " below -tau");
  }
  return out;
}

// ---------------------------------------------------------------------------
// 10. Directional diameter identities across symmetrization.

Outcome criterion_diameters() {
  Outcome out;
  for (const int n : {2, 3}) {
    for (int i = 0; i < 25; ++i) {
      const std::uint64_t sk = 10000 + 1000 * n + 2 * i;
      auto k = random_centered_polytope<double>(n, 6, sk);
      auto c = random_centered_polytope<double>(n, 5, sk + 1);
      const std::string label = "pair(n=" + std::to_string(n) + ",seed=" + std::to_string(sk) + ")";
      expect_close(out, label + " max-diameter vs symmetric core", diameter_max(k, c),
                   diameter(k, intersect(c, negate(c))), kTolDiameter);
      expect_close(out, label + " diameter vs central symmetral", diameter(k, c),
                   diameter(k, arithmetic_mean(c, negate(c))), kTolDiameter);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 11. Infrastructure: representation round-trips, bipolarity, certificate
//     re-validation for every solved containment program, and byte-identical
//     reports for a fixed seed.

Outcome criterion_infrastructure() {
  Outcome out;
  int built = 0;
  for (const int n : {2, 3, 4}) {
    const int quota = n == 4 ? 66 : 67;
    for (int i = 0; i < quota; ++i) {
      const std::uint64_t seed = 11000 + 1000 * n + i;
      const std::size_t m = n == 2   ? 5 + static_cast<std::size_t>(i % 4)
                            : n == 3 ? 5 + static_cast<std::size_t>(i % 2)
                                     : 5;
      auto c = random_centered_polytope<double>(n, m, seed);
      ++built;
      const std::string label =
          "random(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")";
      out.expect(same_geometry(c, make_from_hrep<double>(c.halfspaces()), kTolGeometry),
                 label + ": vertex/halfspace round-trip changed the body");
      out.expect(same_geometry(c, polar(polar(c)), kTolGeometry),
                 label + ": bipolar image differs");
    }
  }
  out.expect(built == 200, "expected 200 round-trip bodies");

  // Containment programs with certificates, re-validated independently.
  int validated = 0;
  for (int i = 0; i < 40; ++i) {
    auto c = random_centered_polytope<double>(2, 5 + static_cast<std::size_t>(i % 4),
                                              14000 + i);
    const double s = minkowski_asymmetry(c).s;
    auto b = four_symmetrizations(c);
    auto outer = scale(b.minimum, s);
    auto res = is_optimally_contained(b.maximum, outer, true);
    const bool ok =
        res.first && res.second.has_value() && validate_certificate(*res.second, b.maximum, outer);
    out.expect(ok, "certificate for seed " + std::to_string(14000 + i) + " failed re-validation");
    validated += ok;
  }
  out.expect(validated == 40, "expected 40 validated certificates");

  // Byte-identical reports across repeated runs with a fixed seed.
  for (const char* scenario : {"reverse-factors", "diameters"}) {
    ScenarioOptions o;
    o.params = {{"count", "2"}, {"dims", "2"}};
    o.seed = 99;
    auto a = run_scenario(scenario, o);
    auto b = run_scenario(scenario, o);
    for (const char* format : {"json", "csv", "text"})
      out.expect(emit_report({a}, format) == emit_report({b}, format),
                 std::string(scenario) + ": " + format + " output not byte-identical");
  }
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> criteria = {
      {"simplex-asymmetry", criterion_simplex_asymmetry},
      {"simplex-mean-factors", criterion_simplex_mean_factors},
      {"reverse-factors-random-corpus", criterion_reverse_factors},
      {"equivalence-agreement", criterion_equivalence_agreement},
      {"golden-house-and-descent", criterion_golden_house},
      {"attaining-families", criterion_attaining_families},
      {"omega-tight-and-loose", criterion_omega_families},
      {"near-simplex-stability", criterion_stability},
      {"mean-nesting-and-gauge-chains", criterion_gauge_chains},
      {"diameter-identities", criterion_diameters},
      {"representation-and-certificates", criterion_infrastructure},
  };

  const auto t0 = std::chrono::steady_clock::now();
  int failed = 0;
  int index = 0;
  for (const auto& entry : criteria) {
    ++index;
    Outcome out;
    try {
      out = entry.run();
    } catch (const Error& e) {
      out.pass = false;
      out.detail = std::string("unexpected error: ") + e.what();
    }
    if (out.pass) {
      std::printf("[PASS] criterion-%02d %s (%d checks)\n", index, entry.name, out.checks);
    } else {
      ++failed;
      std::printf("[FAIL] criterion-%02d %s: %s\n", index, entry.name, out.detail.c_str());
    }
    std::fflush(stdout);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("acceptance: %zu criteria, %d failed, %.1f s\n", criteria.size(), failed, secs);
  return failed == 0 ? 0 : 1;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "sym/means.hpp"
#include "sym/polytope_json.hpp"

using namespace sym;

namespace {

template <typename S>
Polytope<S> triangle() {
  return make_from_vrep<S>({{S(1), S(0)}, {S(0), S(1)}, {S(-1), S(-1)}});
}

template <typename S>
Polytope<S> square() {
  return make_from_vrep<S>({{S(1), S(1)}, {S(1), S(-1)}, {S(-1), S(1)}, {S(-1), S(-1)}});
}

template <typename S>
double tol() {
  return is_exact_v<S> ? 0.0 : 1e-9;
}

// Random full-dimensional polytope translated so 0 is strictly interior.
template <typename S>
Polytope<S> random_body(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  for (;;) {
    std::vector<Vec<S>> pts;
    for (std::size_t i = 0; i < m; ++i) {
      Vec<S> p(n);
      for (std::size_t j = 0; j < n; ++j) p[j] = S(static_cast<int>(rng() % 17) - 8) / S(8);
      pts.push_back(std::move(p));
    }
    if (affine_rank(pts) != n) continue;
    auto body = make_from_vrep(pts);
    return translate(body, vec_neg(interior_point(body)));
  }
}

}  // namespace

TEST_CASE_TEMPLATE("polar swaps cube and cross-polytope", S, Rational, double) {
  auto sq = square<S>();
  auto cross = polar(sq);
  REQUIRE(cross.vertices().size() == 4);
  auto expect = make_from_vrep<S>({{S(1), S(0)}, {S(-1), S(0)}, {S(0), S(1)}, {S(0), S(-1)}});
  CHECK(same_geometry(cross, expect, tol<S>()));
  CHECK(same_geometry(polar(cross), sq, tol<S>()));
}

TEST_CASE("polar of the standard triangle (exact)") {
  using S = Rational;
  auto t = triangle<S>();
  auto tp = polar(t);
  auto expect = make_from_vrep<S>({{S(1), S(1)}, {S(-2), S(1)}, {S(1), S(-2)}});
  CHECK(same_geometry(tp, expect, 0.0));
  CHECK(same_geometry(polar(tp), t, 0.0));
}

TEST_CASE_TEMPLATE("polar requires interior origin", S, Rational, double) {
  auto shifted = make_from_vrep<S>({{S(0), S(0)}, {S(1), S(0)}, {S(0), S(1)}});
  CHECK_THROWS_AS(polar(shifted), OriginNotInterior);
}

TEST_CASE_TEMPLATE("bipolar identity on random bodies", S, Rational, double) {
  std::mt19937_64 rng(555u);
  for (int c = 0; c < 6; ++c) {
    auto p = random_body<S>(rng, 2 + c % 2, 6);
    CHECK(same_geometry(polar(polar(p)), p, is_exact_v<S> ? 0.0 : 1e-7));
  }
}

TEST_CASE_TEMPLATE("minkowski sum of a box and a segment hull", S, Rational, double) {
  auto sq = square<S>();
  auto seg = make_from_vrep<S>({{S(1), S(0)}, {S(-1), S(0)}, {S(0), S(1) / S(4)},
                                {S(0), S(-1) / S(4)}});
  auto sum = minkowski_sum(sq, seg);
  // Sum with conv{±e1, ±e2/4}: an octagon; spot-check support values instead
  // of the full vertex list.
  CHECK(to_double(support(sum, Vec<S>{S(1), S(0)})) == doctest::Approx(2.0));
  CHECK(to_double(support(sum, Vec<S>{S(0), S(1)})) == doctest::Approx(1.25));

  // Exact oracle: [-1,1]^2 + conv{±e1} = [-2,2] x [-1,1].
  auto seg1 = make_from_vrep<S>(
      {{S(1), S(0)}, {S(-1), S(0)}, {S(0), S(1) / S(8)}, {S(0), S(-1) / S(8)}});
  (void)seg1;
  std::vector<Vec<S>> e1seg{{S(1), S(0)}, {S(-1), S(0)}};
  // A segment is lower-dimensional; sum it via vertex pairs directly.
  std::vector<Vec<S>> sums;
  for (const auto& v : sq.vertices())
    for (const auto& w : e1seg) sums.push_back(vec_add(v, w));
  auto rect = make_from_vrep(sums);
  auto expect = make_from_vrep<S>({{S(2), S(1)}, {S(2), S(-1)}, {S(-2), S(1)}, {S(-2), S(-1)}});
  CHECK(same_geometry(rect, expect, tol<S>()));
}

TEST_CASE_TEMPLATE("half difference body of the triangle is the known hexagon", S, Rational,
                   double) {
  auto t = triangle<S>();
  auto diff = arithmetic_mean(t, negate(t));
  auto expect = make_from_vrep<S>({{S(1), S(1) / S(2)},
                                   {S(-1), S(-1) / S(2)},
                                   {S(1) / S(2), S(1)},
                                   {S(-1) / S(2), S(-1)},
                                   {S(1) / S(2), S(-1) / S(2)},
                                   {S(-1) / S(2), S(1) / S(2)}});
  CHECK(same_geometry(diff, expect, tol<S>()));
  CHECK(is_zero_symmetric(diff, 1e-9));
}

TEST_CASE_TEMPLATE("scaling behaves like a homothety", S, Rational, double) {
  auto t = triangle<S>();
  CHECK(same_geometry(scale(t, S(1)), t, tol<S>()));
  auto neg = negate(t);
  auto expect = make_from_vrep<S>({{S(-1), S(0)}, {S(0), S(-1)}, {S(1), S(1)}});
  CHECK(same_geometry(neg, expect, tol<S>()));
  CHECK(same_geometry(negate(neg), t, tol<S>()));
  CHECK_THROWS_AS(scale(t, S(0)), ZeroScale);
  auto half = scale(t, S(1) / S(2));
  CHECK(contains_point(t, half.vertices()[0]));
  CHECK(to_double(gauge(t, half.vertices()[0])) == doctest::Approx(0.5));
}

TEST_CASE_TEMPLATE("intersection of the triangle with its negation", S, Rational, double) {
  auto t = triangle<S>();
  CHECK(same_geometry(intersect(t, t), t, tol<S>()));
  auto hex = intersect(t, negate(t));
  auto expect = make_from_vrep<S>({{S(1) / S(3), S(2) / S(3)},
                                   {S(-1) / S(3), S(-2) / S(3)},
                                   {S(2) / S(3), S(1) / S(3)},
                                   {S(-2) / S(3), S(-1) / S(3)},
                                   {S(1) / S(3), S(-1) / S(3)},
                                   {S(-1) / S(3), S(1) / S(3)}});
  CHECK(same_geometry(hex, expect, tol<S>()));
  CHECK(origin_interior(hex));

  auto far = translate(t, Vec<S>{S(10), S(10)});
  CHECK_THROWS_AS(intersect(t, far), EmptyOrLowerDimensionalIntersection);
}

TEST_CASE_TEMPLATE("hull of a union", S, Rational, double) {
  auto t = triangle<S>();
  CHECK(same_geometry(hull_union(t, t), t, tol<S>()));
  auto sq = square<S>();
  auto u = hull_union(t, sq);
  CHECK(same_geometry(u, sq, tol<S>()));  // triangle sits inside the square
}

TEST_CASE_TEMPLATE("simplex symmetrizations have the known combinatorics", S, Rational,
                   double) {
  // Affine image of the regular tetrahedron; all four symmetrizations keep
  // the combinatorics of the parallelepiped / rhombic-dodecahedral /
  // cuboctahedral / cross-polytopal chain.
  std::vector<Vec<S>> pts{{S(1), S(0), S(0)},
                          {S(0), S(1), S(0)},
                          {S(0), S(0), S(1)},
                          {S(-1), S(-1), S(-1)}};
  auto s = make_from_vrep(pts);
  auto bundle = four_symmetrizations(s);
  CHECK(bundle.maximum.vertices().size() == 8);
  CHECK(bundle.maximum.halfspaces().size() == 6);
  CHECK(bundle.harmonic.halfspaces().size() == 12);
  CHECK(bundle.harmonic.vertices().size() == 14);
  CHECK(bundle.arithmetic.vertices().size() == 12);
  CHECK(bundle.arithmetic.halfspaces().size() == 14);
  CHECK(bundle.minimum.halfspaces().size() == 8);

  // Strict somewhere: the chain is not an equality chain for a simplex.
  CHECK(!same_geometry(bundle.minimum, bundle.harmonic, 1e-7));
  CHECK(!same_geometry(bundle.harmonic, bundle.arithmetic, 1e-7));
  CHECK(!same_geometry(bundle.arithmetic, bundle.maximum, 1e-7));
}

TEST_CASE_TEMPLATE("symmetric bodies are fixed points of all four means", S, Rational, double) {
  auto sq = square<S>();
  auto bundle = four_symmetrizations(sq);
  CHECK(same_geometry(bundle.minimum, sq, tol<S>()));
  CHECK(same_geometry(bundle.harmonic, sq, is_exact_v<S> ? 0.0 : 1e-7));
  CHECK(same_geometry(bundle.arithmetic, sq, tol<S>()));
  CHECK(same_geometry(bundle.maximum, sq, tol<S>()));

  auto shifted = translate(triangle<S>(), Vec<S>{S(5), S(5)});
  CHECK_THROWS_AS(four_symmetrizations(shifted), OriginNotInterior);
}

TEST_CASE_TEMPLATE("means of a body with itself return the body", S, Rational, double) {
  auto t = triangle<S>();
  CHECK(same_geometry(arithmetic_mean(t, t), t, tol<S>()));
  CHECK(same_geometry(harmonic_mean(t, t), t, is_exact_v<S> ? 0.0 : 1e-7));
  auto b = means_bundle(t, t);
  CHECK(same_geometry(b.minimum, t, tol<S>()));
  CHECK(same_geometry(b.maximum, t, tol<S>()));
}

TEST_CASE_TEMPLATE("gauge values", S, Rational, double) {
  auto sq = square<S>();
  auto t = triangle<S>();
  CHECK(to_double(gauge(sq, Vec<S>{S(2), S(0)})) == doctest::Approx(2.0));
  CHECK(to_double(gauge(t, Vec<S>{S(-1), S(0)})) == doctest::Approx(2.0));
  CHECK(to_double(gauge(t, Vec<S>{S(0), S(0)})) == 0.0);
  for (const auto& v : t.vertices())
    CHECK(to_double(gauge(t, v)) == doctest::Approx(1.0).epsilon(1e-9));
  auto shifted = translate(t, Vec<S>{S(5), S(5)});
  CHECK_THROWS_AS(gauge(shifted, Vec<S>{S(1), S(0)}), OriginNotInterior);
}

TEST_CASE_TEMPLATE("support values and gauge-support duality", S, Rational, double) {
  auto sq = square<S>();
  CHECK(to_double(support(sq, Vec<S>{S(1), S(1)})) == doctest::Approx(2.0));
  CHECK(to_double(support(sq, Vec<S>{S(0), S(0)})) == 0.0);

  std::mt19937_64 rng(808u);
  for (int c = 0; c < 5; ++c) {
    auto p = random_body<S>(rng, 2, 6);
    auto pp = polar(p);
    for (int k = 0; k < 10; ++k) {
      Vec<S> x{S(static_cast<int>(rng() % 17) - 8) / S(4),
               S(static_cast<int>(rng() % 17) - 8) / S(4)};
      CHECK(to_double(scalar_abs(gauge(p, x) - support(pp, x))) <=
            (is_exact_v<S> ? 0.0 : 1e-9));
    }
  }
}

TEST_CASE("affine invariance of the four means (exact)") {
  using S = Rational;
  std::mt19937_64 rng(321u);
  for (int c = 0; c < 4; ++c) {
    const std::size_t n = 2 + c % 2;
    auto k = random_body<S>(rng, n, n + 4);
    auto cc = random_body<S>(rng, n, n + 4);
    // Random invertible matrix with small rational entries.
    Matrix<S> a(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          a.at(i, j) = S(static_cast<int>(rng() % 9) - 4) / S(2);
    } while (!invert(a).has_value());

    auto b = means_bundle(k, cc);
    auto bt = means_bundle(linear_image(k, a), linear_image(cc, a));
    CHECK(same_geometry(bt.minimum, linear_image(b.minimum, a), 0.0));
    CHECK(same_geometry(bt.arithmetic, linear_image(b.arithmetic, a), 0.0));
    CHECK(same_geometry(bt.maximum, linear_image(b.maximum, a), 0.0));
    CHECK(same_geometry(bt.harmonic, linear_image(b.harmonic, a), 0.0));
  }
}

TEST_CASE_TEMPLATE("mean chain nesting on random pairs", S, Rational, double) {
  std::mt19937_64 rng(606u);
  for (int c = 0; c < 6; ++c) {
    const std::size_t n = 2 + c % 2;
    auto k = random_body<S>(rng, n, n + 4);
    auto cc = random_body<S>(rng, n, n + 4);
    CHECK_NOTHROW(means_bundle(k, cc));  // nesting verified internally
  }
}

TEST_CASE_TEMPLATE("diameter oracles", S, Rational, double) {
  auto sq = square<S>();
  auto t = triangle<S>();

  // Two-point body along e1 inside the width-2 square.
  std::vector<Vec<S>> seg{{S(0), S(0)}, {S(1), S(0)}};
  S best(0);
  for (std::size_t i = 0; i < seg.size(); ++i)
    for (std::size_t j = i + 1; j < seg.size(); ++j) {
      auto r = circumradius_points<S>({seg[i], seg[j]}, sq);
      if (r.rho > best) best = r.rho;
    }
  CHECK(to_double(S(2) * best) == doctest::Approx(1.0));

  CHECK(to_double(diameter(sq, sq)) == doctest::Approx(2.0));

  // Ordered gauge distances for the segment inside the triangle.
  CHECK(to_double(gauge(t, Vec<S>{S(1), S(0)})) == doctest::Approx(1.0));
  CHECK(to_double(gauge(t, Vec<S>{S(-1), S(0)})) == doctest::Approx(2.0));
  auto segp = make_from_vrep<S>(
      {{S(0), S(0)}, {S(1), S(0)}, {S(1) / S(2), S(1) / S(8)}});
  CHECK(to_double(diameter_max(segp, t)) >= 2.0 - 1e-9);
}

TEST_CASE_TEMPLATE("diameter identities on random instances", S, Rational, double) {
  std::mt19937_64 rng(909u);
  for (int c = 0; c < 6; ++c) {
    const std::size_t n = 2 + c % 2;
    auto k = random_body<S>(rng, n, n + 3);
    auto cc = random_body<S>(rng, n, n + 4);
    const double eps = is_exact_v<S> ? 0.0 : 1e-9;

    const S dmax = diameter_max(k, cc);
    const S d_min_sym = diameter(k, intersect(cc, negate(cc)));
    CHECK(to_double(scalar_abs(dmax - d_min_sym)) <= eps);

    const S d = diameter(k, cc);
    const S d_half_diff = diameter(k, arithmetic_mean(cc, negate(cc)));
    CHECK(to_double(scalar_abs(d - d_half_diff)) <= eps);

    auto sym = intersect(cc, negate(cc));
    CHECK(to_double(scalar_abs(diameter_max(k, sym) - diameter(k, sym))) <= eps);
  }
}

TEST_CASE_TEMPLATE("polytope JSON round trip", S, Rational, double) {
  auto t = triangle<S>();
  auto j = polytope_to_json(t);
  CHECK(j.at("dim") == 2);
  auto back = polytope_from_json<S>(j);
  CHECK(same_geometry(back, t, tol<S>()));

  auto jh = polytope_to_json_hrep(t);
  auto back_h = polytope_from_json<S>(jh);
  CHECK(same_geometry(back_h, t, is_exact_v<S> ? 0.0 : 1e-9));

  nlohmann::json numeric = {{"dim", 2},
                            {"vertices", {{1, 0}, {0, 1}, {-1, -1}}}};
  CHECK(same_geometry(polytope_from_json<S>(numeric), t, tol<S>()));

  nlohmann::json bad = {{"dim", 2}};
  CHECK_THROWS_AS(polytope_from_json<S>(bad), IoError);
}

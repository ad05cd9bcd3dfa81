#pragma once

// Catalog of parameterized bodies used throughout the test-suites and the
// verification scenarios: simplices, caps of simplices, the house-shaped body
// attaining the first asymmetry threshold, the extremal pentagons/hexagons
// for the factor bounds, regular odd polygons, a truncated hexagon whose
// arithmetic mean sits strictly inside the scaled harmonic mean, an
// asymmetry-lowering surgery, seeded random bodies, and prism embeddings.

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sym/containment.hpp"
#include "sym/errors.hpp"
#include "sym/formulas.hpp"
#include "sym/means.hpp"
#include "sym/polytope.hpp"
#include "sym/scalar.hpp"

namespace sym {

namespace detail {

// Unit vertices of the regular n-simplex centered at the origin: the scaled
// standard-basis construction in R^{n+1} reflected down to R^n by the
// Householder map sending the all-ones direction onto the last axis.
inline std::vector<Vec<double>> regular_simplex_vertices(int n) {
  const int big = n + 1;
  const double scale = std::sqrt((n + 1.0) / n);
  // w = normalize(1/sqrt(n+1) * ones - e_{n+1})
  Vec<double> w(big, 1.0 / std::sqrt(static_cast<double>(big)));
  w[big - 1] -= 1.0;
  double wn = 0;
  for (double x : w) wn += x * x;
  wn = std::sqrt(wn);
  for (double& x : w) x /= wn;

  std::vector<Vec<double>> out;
  out.reserve(big);
  for (int j = 0; j < big; ++j) {
    Vec<double> u(big, -scale / big);
    u[j] += scale;
    double wu = 0;
    for (int i = 0; i < big; ++i) wu += w[i] * u[i];
    Vec<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = u[i] - 2.0 * wu * w[i];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace detail

// Regular simplex with unit vertices, pairwise vertex inner product -1/n,
// vertex sum zero. Irrational coordinates: floating backend only.
template <typename S>
Polytope<S> regular_simplex(int n) {
  if (n < 1) throw ParameterOutOfRange("regular_simplex: dimension must be positive");
  if constexpr (is_exact_v<S>) {
    throw DomainError("regular_simplex needs the floating-point backend");
  } else {
    return make_from_vrep(detail::regular_simplex_vertices(n));
  }
}

// Integer-coordinate simplex conv{e^1, ..., e^n, -(1,...,1)} with centroid 0;
// a linear image of the regular simplex, usable on both backends.
template <typename S>
Polytope<S> rational_simplex(int n) {
  if (n < 1) throw ParameterOutOfRange("rational_simplex: dimension must be positive");
  std::vector<Vec<S>> pts;
  pts.reserve(n + 1);
  for (int j = 0; j < n; ++j) {
    Vec<S> e(n, S(0));
    e[j] = S(1);
    pts.push_back(std::move(e));
  }
  pts.emplace_back(static_cast<std::size_t>(n), S(-1));
  return make_from_vrep(pts);
}

namespace detail {

// Backend-appropriate simplex: exact coordinates where possible.
template <typename S>
Polytope<S> base_simplex(int n) {
  if constexpr (is_exact_v<S>) {
    return rational_simplex<S>(n);
  } else {
    return regular_simplex<S>(n);
  }
}

}  // namespace detail

// Cap body S ∩ (-s·S) over a simplex S: Minkowski centered at the origin
// with asymmetry exactly s, for any s in [1, n].
template <typename S>
Polytope<S> simplex_cap(int n, const S& s) {
  if (n < 1) throw ParameterOutOfRange("simplex_cap: dimension must be positive");
  if (s < S(1) || s > S(n))
    throw ParameterOutOfRange("simplex_cap: asymmetry parameter must lie in [1, n]");
  auto base = detail::base_simplex<S>(n);
  return intersect(base, scale(base, S(-s)));
}

// Simplex truncated by a symmetric slab through two of its vertices and then
// recentered; its asymmetry lands exactly on the first threshold gamma1(n)
// and it keeps a pair of parallel supporting facets at distance ratio 1.
template <typename S>
Polytope<S> golden_house(int n) {
  if (n < 2) throw ParameterOutOfRange("golden_house: dimension must be at least 2");
  if constexpr (is_exact_v<S>) {
    throw DomainError("golden_house needs the floating-point backend");
  } else {
    const auto verts = detail::regular_simplex_vertices(n);
    const double xi = (1.0 - n + std::sqrt(static_cast<double>(n) * n - 2.0 * n + 5.0)) / 4.0;
    const double eta = 2.0 * xi * (1.0 + 1.0 / n);
    const double s = n - 1.0 + 2.0 * xi;
    const double nu = (1.0 - 2.0 * xi) / (1.0 - 2.0 * xi - n);

    auto body = regular_simplex<S>(n);
    const Vec<S> d = vec_sub(verts[0], verts[1]);
    std::vector<Halfspace<S>> hs = body.halfspaces();
    hs.push_back({d, S(eta)});
    hs.push_back({vec_neg(d), S(eta)});
    auto cut = make_from_hrep(hs);

    // Minkowski center of the cut body: along the midpoint of the truncated
    // edge, pulled toward the opposite face by nu * s/(s+1).
    const Vec<S> c = vec_scale(vec_add(verts[0], verts[1]), S(s / (s + 1.0) * nu / 2.0));
    return translate(cut, vec_neg(c));
  }
}

// Planar pentagon realizing the largest-known intersection-in-hull factor at
// asymmetry s: measure_alpha = s/(s^2 - 1) for s up to 2.
template <typename S>
Polytope<S> alpha_pentagon(const S& s) {
  if constexpr (is_exact_v<S>) {
    throw DomainError("alpha_pentagon needs the floating-point backend");
  } else {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    if (s < S(phi))
      throw ParameterOutOfRange("alpha_pentagon: parameter must be at least the golden ratio");
    const S w = S(phi + 1.0);
    const S top = w * (S(2) - s - S(1) / (s + S(1)));
    const S low = -w / (s + S(1));
    const S apex = s * w / (s + S(1));
    return make_from_vrep<S>({{S(1), top}, {S(-1), top}, {S(1), low}, {S(-1), low}, {S(0), apex}});
  }
}

// Planar hexagon attaining the harmonic-in-arithmetic lower bound
// 4s/(s+1)^2 at asymmetry s in [1, 2]. Rational coordinates (a linear image
// of the regular construction), usable on both backends.
template <typename S>
Polytope<S> beta_hexagon(const S& s) {
  if (s < S(1) || s > S(2))
    throw ParameterOutOfRange("beta_hexagon: parameter must lie in [1, 2]");
  const S x1 = S(1) - s / S(2);
  const S x2 = (s + S(1)) / S(2);
  const S x3 = s - S(1) / S(2);
  const S y1 = s / S(2);
  const S y2 = (S(1) - s) / S(2);
  const S y3 = S(-1) / S(2);
  return make_from_vrep<S>({{x1, y1}, {-x1, y1}, {x2, y2}, {-x2, y2}, {x3, y3}, {-x3, y3}});
}

// Planar pentagon whose harmonic-in-arithmetic factor follows two regimes:
// s/(s^2-1) for s in [phi, 5/3] and 4s/(s+1)^2 for s in [5/3, 2].
template <typename S>
Polytope<S> beta_pentagon(const S& s) {
  if constexpr (is_exact_v<S>) {
    throw DomainError("beta_pentagon needs the floating-point backend");
  } else {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    if (s < S(phi) || s > S(2))
      throw ParameterOutOfRange("beta_pentagon: parameter must lie in [golden ratio, 2]");
    const S x = S(std::sqrt(3.0) / 2.0) * (s - S(1));
    const S top = S(3) / S(2) * (S(-1) / (s + S(1)) + S(2) - s);
    const S low = S(-3) / (S(2) * (s + S(1)));
    const S apex = S(3) * s / (S(2) * (s + S(1)));
    return make_from_vrep<S>({{x, top}, {-x, top}, {x, low}, {-x, low}, {S(0), apex}});
  }
}

// Regular k-gon with odd k, unit circumradius, one vertex straight up.
// Its asymmetry is 1/cos(pi/k) and its arithmetic mean fills the scaled
// harmonic mean optimally.
template <typename S>
Polytope<S> regular_kgon(int k) {
  if (k % 2 == 0) throw EvenK("regular_kgon: the vertex count must be odd");
  if (k < 3) throw ParameterOutOfRange("regular_kgon: need at least 3 vertices");
  if constexpr (is_exact_v<S>) {
    throw DomainError("regular_kgon needs the floating-point backend");
  } else {
    std::vector<Vec<S>> pts;
    pts.reserve(k);
    const double step = 2.0 * std::acos(-1.0) / k;
    for (int j = 0; j < k; ++j) {
      const double angle = step * j + std::acos(-1.0) / 2.0;
      pts.push_back({S(std::cos(angle)), S(std::sin(angle))});
    }
    return make_from_vrep(pts);
  }
}

// Truncation of the planar cap hexagon K = S ∩ (-s·S), s in (1, 2): keeps one
// vertex of each short edge, the midpoints of the short edges, and every
// second vertex of K ∩ (-K). Minkowski centered with asymmetry s, but its
// arithmetic mean stays strictly inside (s+1)/2 times its harmonic mean.
template <typename S>
Polytope<S> truncated_hexagon(const S& s) {
  if (s <= S(1) || s >= S(2))
    throw ParameterOutOfRange("truncated_hexagon: parameter must lie strictly inside (1, 2)");

  // Vertices of the underlying triangle (exact image on the rational backend).
  std::vector<Vec<S>> v;
  if constexpr (is_exact_v<S>) {
    v = {{S(1), S(0)}, {S(0), S(1)}, {S(-1), S(-1)}};
  } else {
    v = detail::regular_simplex_vertices(2);
  }

  // Corner-cut vertices of K = S ∩ (-s·S), walked along the boundary so that
  // p[0]p[1], p[2]p[3], p[4]p[5] are the three cut edges.
  const S a = (S(2) * s - S(1)) / S(3);
  const S b = (s - S(2)) / S(3);
  auto mix = [&](int i, int j) { return vec_add(vec_scale(v[i], a), vec_scale(v[j], b)); };
  const std::vector<Vec<S>> p = {mix(0, 1), mix(0, 2), mix(1, 2),
                                 mix(1, 0), mix(2, 0), mix(2, 1)};

  const S half = S(1) / S(2);
  const S shrink = S(1) / (s + S(1));
  auto mid = [&](int i, int j) { return vec_scale(vec_add(p[i], p[j]), half); };
  auto diff = [&](int i, int j) { return vec_scale(vec_sub(p[i], p[j]), shrink); };
  return make_from_vrep<S>({p[1], p[3], p[5], mid(0, 1), mid(2, 3), mid(4, 5),
                            diff(0, 3), diff(2, 5), diff(4, 1)});
}

// Asymmetry-lowering surgery: from a Minkowski centered body whose mean chain
// is optimal on both sides, build conv{p^j, -s_target p^j, ±p} from the
// asymmetry touching points p^j and a parallel-support witness p. The result
// has asymmetry exactly s_target and keeps the optimal chain.
template <typename S>
Polytope<S> asymmetry_descent(const Polytope<S>& c, const S& s_target) {
  auto asym = minkowski_asymmetry(c);
  auto c0 = translate(c, vec_neg(asym.center));
  const S s = asym.s;
  if (s_target < S(1) - scalar_tolerance<S>() || s_target > s + scalar_tolerance<S>())
    throw ParameterOutOfRange("asymmetry_descent: target must lie in [1, s(C)]");

  auto eq = check_equivalence(c0, negate(c0));
  if (!eq.first || !eq.second)
    throw PrerequisiteFails("asymmetry_descent: the input's mean chain is not optimal");
  auto wit = parallel_support_witness(c0);
  if (!wit)
    throw PrerequisiteFails("asymmetry_descent: no parallel-support witness");
  const S neg_inv = S(-1) / s;
  auto cert = is_optimally_contained(scale(c0, neg_inv), c0, true);
  if (!cert.first || !cert.second)
    throw PrerequisiteFails("asymmetry_descent: asymmetry containment is not optimal");

  std::vector<Vec<S>> pts;
  pts.reserve(2 * cert.second->count + 2);
  for (const auto& q : cert.second->points) {
    pts.push_back(q);
    pts.push_back(vec_scale(q, S(-s_target)));
  }
  pts.push_back(wit->first);
  pts.push_back(vec_neg(wit->first));
  return make_from_vrep(pts);
}

// Seeded random full-dimensional polytope, translated to its Minkowski
// center. Deterministic for a fixed seed, identical across backends.
template <typename S>
Polytope<S> random_centered_polytope(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < n + 1)
    throw ParameterOutOfRange("random_centered_polytope: need at least n+1 points");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vec<S>> pts;
    pts.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      Vec<S> q(n);
      for (std::size_t j = 0; j < n; ++j)
        q[j] = S(static_cast<int>(rng() % 17) - 8) / S(8);
      pts.push_back(std::move(q));
    }
    if (affine_rank(pts) != n) continue;
    auto body = make_from_vrep(pts);
    body = translate(body, vec_neg(interior_point(body)));
    return translate(body, vec_neg(minkowski_asymmetry(body).center));
  }
  throw NumericFailure("random_centered_polytope: kept drawing degenerate point sets");
}

// Prism embedding C × [-delta, delta]^(n_target - dim). Keeps the Minkowski
// center at 0 and the asymmetry exactly; the slab directions are symmetric,
// so the symmetrization factors of the prism are those of a body that is
// already symmetric in the extra coordinates (alpha and beta become 1).
template <typename S>
Polytope<S> embed(const Polytope<S>& c, std::size_t n_target, const S& delta) {
  if (n_target <= c.dim)
    throw ParameterOutOfRange("embed: target dimension must exceed the body's");
  if (!(delta > S(0))) throw ParameterOutOfRange("embed: thickness must be positive");
  const std::size_t extra = n_target - c.dim;
  std::vector<Vec<S>> pts;
  pts.reserve(c.vertices().size() << extra);
  for (const auto& v : c.vertices()) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << extra); ++mask) {
      Vec<S> q = v;
      q.resize(n_target);
      for (std::size_t j = 0; j < extra; ++j)
        q[c.dim + j] = ((mask >> j) & 1) != 0 ? delta : S(-delta);
      pts.push_back(std::move(q));
    }
  }
  return make_from_vrep(pts);
}

template <typename S>
Polytope<S> embed(const Polytope<S>& c, std::size_t n_target) {
  return embed(c, n_target, S(1) / S(1000));
}

// ---------------------------------------------------------------------------
// Textual addressing of constructions (CLI "name:param=value,..." strings).

struct ConstructionSpec {
  std::string name;
  int dimension = 0;  // mirror of the "n" parameter when present
  std::map<std::string, std::string> parameters;
  std::string backend;  // "exact" | "approx"; advisory, the caller picks
};

inline ConstructionSpec parse_construction_spec(const std::string& text) {
  ConstructionSpec spec;
  const auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (spec.name.empty()) throw BadParams("construction name is empty");
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size() && !rest.empty()) {
      auto comma = rest.find(',', start);
      const std::string item =
          rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!item.empty()) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
          throw BadParams("malformed construction parameter: " + item);
        const std::string key = item.substr(0, eq);
        if (spec.parameters.count(key))
          throw BadParams("duplicate construction parameter: " + key);
        spec.parameters[key] = item.substr(eq + 1);
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (auto it = spec.parameters.find("n"); it != spec.parameters.end()) {
    try {
      spec.dimension = std::stoi(it->second);
    } catch (const std::exception&) {
      throw BadParams("construction parameter n is not an integer");
    }
  }
  return spec;
}

namespace detail {

inline long long spec_int(const ConstructionSpec& spec, const std::string& key) {
  auto it = spec.parameters.find(key);
  if (it == spec.parameters.end())
    throw BadParams("construction " + spec.name + " needs parameter " + key);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw BadParams("");
    return v;
  } catch (const std::exception&) {
    throw BadParams("construction parameter " + key + " is not an integer");
  }
}

template <typename S>
S spec_scalar(const ConstructionSpec& spec, const std::string& key) {
  auto it = spec.parameters.find(key);
  if (it == spec.parameters.end())
    throw BadParams("construction " + spec.name + " needs parameter " + key);
  try {
    return parse_scalar<S>(it->second);
  } catch (const std::exception&) {
    throw BadParams("construction parameter " + key + " is not a number");
  }
}

inline void spec_expect_keys(const ConstructionSpec& spec,
                             std::initializer_list<const char*> keys) {
  for (const auto& [key, value] : spec.parameters) {
    bool known = false;
    for (const char* k : keys)
      if (key == k) known = true;
    if (!known)
      throw BadParams("construction " + spec.name + " does not take parameter " + key);
  }
}

}  // namespace detail

// Builds the named construction. Composite names ("asymmetry_descent",
// "embed") take a "base=<name>" parameter plus the base's own parameters.
template <typename S>
Polytope<S> build_construction(const ConstructionSpec& spec) {
  const std::string& name = spec.name;
  if (name == "regular_simplex") {
    detail::spec_expect_keys(spec, {"n"});
    return regular_simplex<S>(static_cast<int>(detail::spec_int(spec, "n")));
  }
  if (name == "rational_simplex") {
    detail::spec_expect_keys(spec, {"n"});
    return rational_simplex<S>(static_cast<int>(detail::spec_int(spec, "n")));
  }
  if (name == "simplex_cap") {
    detail::spec_expect_keys(spec, {"n", "s"});
    return simplex_cap<S>(static_cast<int>(detail::spec_int(spec, "n")),
                          detail::spec_scalar<S>(spec, "s"));
  }
  if (name == "golden_house") {
    detail::spec_expect_keys(spec, {"n"});
    return golden_house<S>(static_cast<int>(detail::spec_int(spec, "n")));
  }
  if (name == "alpha_pentagon") {
    detail::spec_expect_keys(spec, {"s"});
    return alpha_pentagon<S>(detail::spec_scalar<S>(spec, "s"));
  }
  if (name == "beta_hexagon") {
    detail::spec_expect_keys(spec, {"s"});
    return beta_hexagon<S>(detail::spec_scalar<S>(spec, "s"));
  }
  if (name == "beta_pentagon") {
    detail::spec_expect_keys(spec, {"s"});
    return beta_pentagon<S>(detail::spec_scalar<S>(spec, "s"));
  }
  if (name == "regular_kgon") {
    detail::spec_expect_keys(spec, {"k"});
    return regular_kgon<S>(static_cast<int>(detail::spec_int(spec, "k")));
  }
  if (name == "truncated_hexagon") {
    detail::spec_expect_keys(spec, {"s"});
    return truncated_hexagon<S>(detail::spec_scalar<S>(spec, "s"));
  }
  if (name == "random_centered_polytope") {
    detail::spec_expect_keys(spec, {"n", "m", "seed"});
    return random_centered_polytope<S>(
        static_cast<std::size_t>(detail::spec_int(spec, "n")),
        static_cast<std::size_t>(detail::spec_int(spec, "m")),
        static_cast<std::uint64_t>(detail::spec_int(spec, "seed")));
  }
  if (name == "asymmetry_descent" || name == "embed") {
    auto it = spec.parameters.find("base");
    if (it == spec.parameters.end())
      throw BadParams("construction " + name + " needs parameter base");
    ConstructionSpec inner = spec;
    inner.name = it->second;
    inner.parameters.erase("base");
    if (inner.name == "asymmetry_descent" || inner.name == "embed")
      throw BadParams("construction " + name + " cannot nest another composite");
    if (name == "asymmetry_descent") {
      const S target = detail::spec_scalar<S>(spec, "s_target");
      inner.parameters.erase("s_target");
      return asymmetry_descent(build_construction<S>(inner), target);
    }
    const auto n_target = static_cast<std::size_t>(detail::spec_int(spec, "n_target"));
    inner.parameters.erase("n_target");
    if (spec.parameters.count("delta")) {
      const S delta = detail::spec_scalar<S>(spec, "delta");
      inner.parameters.erase("delta");
      return embed(build_construction<S>(inner), n_target, delta);
    }
    return embed(build_construction<S>(inner), n_target);
  }
  throw BadParams("unknown construction: " + name);
}

}  // namespace sym

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sym/circumradius.hpp"
#include "sym/errors.hpp"
#include "sym/linalg.hpp"
#include "sym/means.hpp"
#include "sym/polytope.hpp"
#include "sym/scalar.hpp"

namespace sym {

// Certificate that K sits optimally inside C: touching points on the boundary
// of C with outer normals whose convex combination vanishes.
template <typename S>
struct ContainmentCertificate {
  std::vector<Vec<S>> points;   // p^j in K and on bd(C)
  std::vector<Vec<S>> normals;  // u^j, outer normal of C at p^j
  std::vector<S> coefficients;  // lambda_j >= 0, sum 1, sum lambda_j u^j = 0
  std::size_t count = 0;        // in {2, ..., n+1}
};

template <typename S>
struct AsymmetryResult {
  S s;         // Minkowski asymmetry, in [1, n]
  Vec<S> center;  // a Minkowski center
};

enum class FactorName { Alpha, Beta, Omega };

inline std::string factor_name_string(FactorName f) {
  switch (f) {
    case FactorName::Alpha: return "alpha";
    case FactorName::Beta: return "beta";
    case FactorName::Omega: return "omega";
  }
  return "?";
}

template <typename S>
struct FactorReport {
  FactorName name;
  S value;
  ContainmentCertificate<S> certificate;
};

// ---------------------------------------------------------------------------
// Certificate validation, fully independent of the LP that produced it.
// ---------------------------------------------------------------------------

template <typename S>
bool validate_certificate(const ContainmentCertificate<S>& cert, const Polytope<S>& k,
                          const Polytope<S>& c) {
  const double tol = is_exact_v<S> ? 0.0 : 10 * to_double(approx_tolerance());
  const std::size_t n = c.dim;
  if (cert.count != cert.points.size() || cert.count != cert.normals.size() ||
      cert.count != cert.coefficients.size())
    return false;
  if (cert.count < 2 || cert.count > n + 1) return false;

  S sum(0);
  Vec<S> combo(n, S(0));
  for (std::size_t j = 0; j < cert.count; ++j) {
    if (to_double(cert.coefficients[j]) < -tol) return false;
    sum += cert.coefficients[j];
    for (std::size_t i = 0; i < n; ++i) combo[i] += cert.coefficients[j] * cert.normals[j][i];
  }
  if (to_double(scalar_abs(sum - S(1))) > tol) return false;
  double norm_scale = 1.0;
  for (const auto& u : cert.normals) norm_scale = std::max(norm_scale, to_double(norm_inf(u)));
  for (const auto& x : combo)
    if (to_double(scalar_abs(x)) > tol * norm_scale) return false;

  for (std::size_t j = 0; j < cert.count; ++j) {
    const Vec<S>& p = cert.points[j];
    const Vec<S>& u = cert.normals[j];
    if (!contains_point(k, p) || !contains_point(c, p)) return false;
    // p must be tight on some facet of C whose normal is a positive multiple
    // of u (our certificates always use facet-aligned normals).
    bool supported = false;
    for (const auto& h : c.halfspaces()) {
      const double gap = to_double(scalar_abs(dot(h.normal, p) - h.offset));
      const double scale_h = std::max(1.0, to_double(scalar_abs(h.offset)));
      if (gap > tol * scale_h) continue;
      // Parallel and same direction: u * (a.a) == a * (u.a) with u.a > 0.
      const S ua = dot(u, h.normal);
      if (!(to_double(ua) > 0)) continue;
      const S aa = dot(h.normal, h.normal);
      bool parallel = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (to_double(scalar_abs(u[i] * aa - h.normal[i] * ua)) >
            tol * std::max(1.0, to_double(scalar_abs(aa)))) {
          parallel = false;
          break;
        }
      }
      if (parallel) {
        supported = true;
        break;
      }
    }
    if (!supported) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Circumradius of a polytope pair (thin wrapper over the point-set LP).
// ---------------------------------------------------------------------------

template <typename S>
CircumradiusResult<S> circumradius(const Polytope<S>& k, const Polytope<S>& c) {
  if (k.dim != c.dim) throw DimensionMismatch("circumradius: dimension mismatch");
  return circumradius_points(k.vertices(), c);
}

namespace detail {

// Carathéodory reduction: thin a convex zero-combination of normals down to
// at most n+1 terms, preserving sum(lambda)=1 and sum(lambda u)=0.
template <typename S>
void caratheodory_reduce(ContainmentCertificate<S>& cert, std::size_t n) {
  const double drop_tol = is_exact_v<S> ? 0.0 : 10 * to_double(approx_tolerance());
  while (cert.count > n + 1) {
    Matrix<S> m(n + 1, cert.count);
    for (std::size_t j = 0; j < cert.count; ++j) {
      for (std::size_t i = 0; i < n; ++i) m.at(i, j) = cert.normals[j][i];
      m.at(n, j) = S(1);
    }
    auto mu = kernel_vector(m);
    if (!mu) throw NumericFailure("certificate reduction found no kernel direction");
    bool has_positive = false;
    for (const auto& x : *mu) has_positive |= (to_double(x) > 0);
    if (!has_positive)
      for (auto& x : *mu) x = -x;
    bool first = true;
    S theta(0);
    for (std::size_t j = 0; j < cert.count; ++j) {
      if (!(to_double((*mu)[j]) > 0)) continue;
      const S ratio = cert.coefficients[j] / (*mu)[j];
      if (first || ratio < theta) {
        theta = ratio;
        first = false;
      }
    }
    if (first) throw NumericFailure("certificate reduction degenerate");
    ContainmentCertificate<S> next;
    for (std::size_t j = 0; j < cert.count; ++j) {
      const S lam = cert.coefficients[j] - theta * (*mu)[j];
      if (to_double(lam) <= drop_tol) continue;
      next.points.push_back(cert.points[j]);
      next.normals.push_back(cert.normals[j]);
      next.coefficients.push_back(lam);
    }
    next.count = next.points.size();
    if (next.count >= cert.count)
      throw NumericFailure("certificate reduction made no progress");
    cert = std::move(next);
  }
  // Renormalize the coefficient sum (drops can shave epsilons in approx mode).
  S sum(0);
  for (const auto& l : cert.coefficients) sum += l;
  if (sum > S(0))
    for (auto& l : cert.coefficients) l /= sum;
}

}  // namespace detail

// Optimal containment test: K inside C with no strictly smaller homothet of C
// containing K. When optimal (and requested), returns a certificate that is
// re-validated independently of the LP.
template <typename S>
std::pair<bool, std::optional<ContainmentCertificate<S>>> is_optimally_contained(
    const Polytope<S>& k, const Polytope<S>& c, bool want_certificate = true) {
  if (k.dim != c.dim) throw DimensionMismatch("containment: dimension mismatch");
  for (const auto& v : k.vertices())
    if (!contains_point(c, v)) throw NotContained("inner body is not inside the outer body");

  // The scale-minimization LP requires 0 strictly inside the outer body;
  // translation invariance lets us shift both bodies when it is not.
  Vec<S> z(k.dim, S(0));
  const Polytope<S>* kp = &k;
  const Polytope<S>* cp = &c;
  Polytope<S> k_shift, c_shift;
  if (!origin_interior(c)) {
    z = interior_point(c);
    k_shift = translate(k, vec_neg(z));
    c_shift = translate(c, vec_neg(z));
    kp = &k_shift;
    cp = &c_shift;
  }

  auto circ = circumradius_points(kp->vertices(), *cp);
  const double thresh = is_exact_v<S> ? 1.0 : 1.0 - 10 * to_double(approx_tolerance());
  const bool optimal = to_double(circ.rho) >= thresh;
  if (!optimal || !want_certificate) return {optimal, std::nullopt};

  // Assemble the certificate from dual multipliers. Row order is
  // (vertex-major, facet-minor); lambda = -y for the minimizing LP.
  ContainmentCertificate<S> cert;
  const auto& verts = kp->vertices();
  const auto& facets = cp->halfspaces();
  const double keep_tol = is_exact_v<S> ? 0.0 : 10 * to_double(approx_tolerance());
  for (std::size_t vi = 0; vi < verts.size(); ++vi) {
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
      const std::size_t row = vi * facets.size() + fi;
      const S lambda = S(-circ.lp.dual[row]);
      if (!(to_double(lambda) > keep_tol)) continue;
      // Touching point in original coordinates; normal direction from the
      // facet (translation leaves normal cones unchanged).
      cert.points.push_back(vec_add(verts[vi], z));
      Vec<S> u(c.dim);
      for (std::size_t i = 0; i < c.dim; ++i) u[i] = facets[fi].normal[i] / facets[fi].offset;
      cert.normals.push_back(std::move(u));
      cert.coefficients.push_back(lambda);
    }
  }
  cert.count = cert.points.size();
  if (cert.count < 2) throw NumericFailure("degenerate containment certificate");
  detail::caratheodory_reduce(cert, c.dim);
  if (!validate_certificate(cert, k, c))
    throw NumericFailure("containment certificate failed independent validation");
  return {true, std::move(cert)};
}

// Minkowski asymmetry and a Minkowski center: the least s with
// C - c inside s*(c - C), found by the circumradius LP on (-C, C).
template <typename S>
AsymmetryResult<S> minkowski_asymmetry(const Polytope<S>& c) {
  const Vec<S> z = interior_point(c);
  auto shifted = translate(c, vec_neg(z));
  std::vector<Vec<S>> neg_vertices;
  neg_vertices.reserve(shifted.vertices().size());
  for (const auto& v : shifted.vertices()) neg_vertices.push_back(vec_neg(v));
  auto circ = circumradius_points(neg_vertices, shifted);

  AsymmetryResult<S> res;
  res.s = circ.rho;
  // -C' inside rho*C' + t  =>  center of C' is  -t/(1+rho);  shift back.
  res.center = vec_add(vec_scale(circ.t, S(-1) / (S(1) + circ.rho)), z);

  const double slack = is_exact_v<S> ? 0.0 : 10 * to_double(approx_tolerance());
  const double n = static_cast<double>(c.dim);
  if (to_double(res.s) < 1.0 - slack || to_double(res.s) > n + slack)
    throw NumericFailure("asymmetry outside [1, n]");
  return res;
}

namespace detail {

// Requires the body to be in Minkowski-centered position: 0 must be one of
// its Minkowski centers. Centers need not be unique (prisms have a whole
// segment of them), so the test is whether -C fits in s*C without any
// translation, not whether the - arbitrarily chosen - LP center is 0.
template <typename S>
Polytope<S> recenter_checked(const Polytope<S>& c, S* s_out) {
  if (!origin_interior(c))
    throw NotMinkowskiCentered("body must be in Minkowski-centered position");
  auto asym = minkowski_asymmetry(c);
  if (s_out) *s_out = asym.s;
  S untranslated = S(0);
  for (const auto& v : c.vertices()) {
    const S g = gauge(c, vec_neg(v));
    if (g > untranslated) untranslated = g;
  }
  const double slack = is_exact_v<S> ? 0.0 : 10 * to_double(approx_tolerance());
  if (to_double(untranslated) <= to_double(asym.s) + slack) return c;
  // Unique-center drift within tolerance: re-translate instead of failing.
  const double tol = to_double(scalar_tolerance<S>());
  for (const auto& x : asym.center)
    if (to_double(scalar_abs(x)) > tol)
      throw NotMinkowskiCentered("body must be in Minkowski-centered position");
  return translate(c, vec_neg(asym.center));
}

// Largest gauge of the outer body over the inner body's vertices, plus the
// antipodal two-point optimality certificate for 0-symmetric pairs.
template <typename S>
FactorReport<S> symmetric_dilatation_factor(FactorName name, const Polytope<S>& inner,
                                            const Polytope<S>& outer) {
  const auto& vs = inner.vertices();
  if (vs.empty()) throw EmptyOrLowerDimensional("factor of an empty body");
  S best = gauge(outer, vs.front());
  std::size_t best_idx = 0;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const S g = gauge(outer, vs[i]);
    if (g > best) {
      best = g;
      best_idx = i;
    }
  }

  FactorReport<S> report;
  report.name = name;
  report.value = best;

  // Certificate against the outer body scaled by the factor: the attaining
  // vertex and its antipode touch, with opposite facet normals.
  const Vec<S>& v = vs[best_idx];
  const double tol = is_exact_v<S> ? 0.0 : 10 * to_double(approx_tolerance());
  const Halfspace<S>* attain = nullptr;
  for (const auto& h : outer.halfspaces()) {
    if (to_double(scalar_abs(dot(h.normal, v) / h.offset - best)) <=
        tol * std::max(1.0, to_double(best)))
      attain = &h;
    if (attain) break;
  }
  if (!attain) throw NumericFailure("no attaining facet for the measured factor");
  report.certificate.points = {v, vec_neg(v)};
  report.certificate.normals = {attain->normal, vec_neg(attain->normal)};
  report.certificate.coefficients = {S(1) / S(2), S(1) / S(2)};
  report.certificate.count = 2;
  if (!validate_certificate(report.certificate, inner, scale(outer, best)))
    throw NumericFailure("factor certificate failed independent validation");
  return report;
}

}  // namespace detail

// alpha: smallest dilatation of conv(C ∪ -C) containing C ∩ -C.
template <typename S>
FactorReport<S> measure_alpha(const Polytope<S>& c) {
  auto c0 = detail::recenter_checked(c, static_cast<S*>(nullptr));
  auto inner = intersect(c0, negate(c0));
  auto outer = hull_union(c0, negate(c0));
  return detail::symmetric_dilatation_factor(FactorName::Alpha, inner, outer);
}

// beta: smallest dilatation of the arithmetic symmetrization containing the
// harmonic symmetrization.
template <typename S>
FactorReport<S> measure_beta(const Polytope<S>& c) {
  auto c0 = detail::recenter_checked(c, static_cast<S*>(nullptr));
  if (!origin_interior(c0)) throw OriginNotInterior("beta needs 0 inside the body");
  auto b = four_symmetrizations(c0);
  return detail::symmetric_dilatation_factor(FactorName::Beta, b.harmonic, b.arithmetic);
}

// omega: smallest dilatation of the harmonic symmetrization containing the
// arithmetic symmetrization (the reverse direction; lies in [1, (s+1)/2]).
template <typename S>
FactorReport<S> measure_omega(const Polytope<S>& c) {
  S s(0);
  auto c0 = detail::recenter_checked(c, &s);
  if (!origin_interior(c0)) throw OriginNotInterior("omega needs 0 inside the body");
  auto b = four_symmetrizations(c0);
  auto report =
      detail::symmetric_dilatation_factor(FactorName::Omega, b.arithmetic, b.harmonic);
  const double slack = is_exact_v<S> ? 0.0 : 10 * to_double(approx_tolerance());
  const double upper = (to_double(s) + 1.0) / 2.0;
  if (to_double(report.value) < 1.0 - slack || to_double(report.value) > upper + slack)
    throw NumericFailure("omega outside [1, (s+1)/2]");
  return report;
}

template <typename S>
struct ReverseFactorCheck {
  S expected;
  S measured;
  bool optimal = false;
};

// The six reverse containments between the four symmetrizations, each checked
// at its predicted factor. Keys: max_in_min (factor s), max_in_arith and
// harm_in_min (2s/(s+1)), arith_in_min and max_in_harm ((s+1)/2), and
// arith_in_harm (bound (s+1)/2, optimality reported but not asserted).
template <typename S>
std::map<std::string, ReverseFactorCheck<S>> verify_reverse_factors(const Polytope<S>& c) {
  S s(0);
  auto c0 = detail::recenter_checked(c, &s);
  if (!origin_interior(c0)) throw OriginNotInterior("reverse factors need 0 inside");
  auto b = four_symmetrizations(c0);

  auto dilatation = [](const Polytope<S>& inner, const Polytope<S>& outer) {
    S best(0);
    for (const auto& v : inner.vertices()) {
      const S g = gauge(outer, v);
      if (g > best) best = g;
    }
    return best;
  };
  auto check = [&](const Polytope<S>& inner, const Polytope<S>& outer, const S& expected) {
    ReverseFactorCheck<S> r;
    r.expected = expected;
    r.measured = dilatation(inner, outer);
    try {
      r.optimal = is_optimally_contained(inner, scale(outer, expected), false).first;
    } catch (const NotContained&) {
      r.optimal = false;
    }
    return r;
  };

  const S two_s_over = S(2) * s / (s + S(1));
  const S half_plus = (s + S(1)) / S(2);
  std::map<std::string, ReverseFactorCheck<S>> out;
  out["max_in_min"] = check(b.maximum, b.minimum, s);
  out["max_in_arith"] = check(b.maximum, b.arithmetic, two_s_over);
  out["harm_in_min"] = check(b.harmonic, b.minimum, two_s_over);
  out["arith_in_min"] = check(b.arithmetic, b.minimum, half_plus);
  out["max_in_harm"] = check(b.maximum, b.harmonic, half_plus);
  out["arith_in_harm"] = check(b.arithmetic, b.harmonic, half_plus);
  return out;
}

// The two sides of the mean-chain equivalence for a positioned pair (K, C):
// "minimum optimally inside maximum" and "harmonic optimally inside
// arithmetic". The theorem says the booleans always agree; callers assert it.
template <typename S>
std::pair<bool, bool> check_equivalence(const Polytope<S>& k, const Polytope<S>& c) {
  auto minimum = intersect(k, c);
  if (!origin_interior(minimum))
    throw OriginNotInterior("equivalence check needs 0 inside K ∩ C");
  const bool minmax = is_optimally_contained(minimum, hull_union(k, c), false).first;
  const bool harm_arith =
      is_optimally_contained(harmonic_mean(k, c), arithmetic_mean(k, c), false).first;
  return {minmax, harm_arith};
}

// A pair (p, a) with p, -p on bd(C) and the two parallel halfspaces
// a.x <= rho, -a.x <= rho (rho = a.p) both supporting C — exactly when the
// minimum symmetrization sits optimally in the maximum one. The returned p is
// the first vertex in canonical order that touches, so the choice is
// deterministic.
template <typename S>
std::optional<std::pair<Vec<S>, Vec<S>>> parallel_support_witness(const Polytope<S>& c) {
  if (!origin_interior(c)) throw OriginNotInterior("witness search needs 0 inside");
  auto m = intersect(c, negate(c));
  auto x = hull_union(c, negate(c));
  const double tol = is_exact_v<S> ? 0.0 : 10 * to_double(approx_tolerance());
  for (const auto& p : m.vertices()) {
    if (to_double(gauge(x, p)) < 1.0 - tol) continue;
    for (const auto& h : x.halfspaces()) {
      const double gap = to_double(scalar_abs(dot(h.normal, p) - h.offset));
      if (gap <= tol * std::max(1.0, to_double(scalar_abs(h.offset))))
        return std::make_pair(p, h.normal);
    }
  }
  return std::nullopt;
}

// Polar duality of optimal containment for 0-symmetric bodies, plus the
// closest-facet touching bound: P° sits optimally in (1/|v|²)P where v is the
// perpendicular foot of a closest facet of P.
template <typename S>
bool polar_optimality_check(const Polytope<S>& p, const Polytope<S>& k) {
  const double sym_tol = is_exact_v<S> ? 0.0 : 10 * to_double(approx_tolerance());
  if (!is_zero_symmetric(p, sym_tol) || !is_zero_symmetric(k, sym_tol))
    throw NotSymmetric("polar optimality requires 0-symmetric bodies");
  for (const auto& v : p.vertices())
    if (!contains_point(k, v)) throw NotContained("P must sit inside K");

  const bool direct = is_optimally_contained(p, k, false).first;
  const bool polar_side = is_optimally_contained(polar(k), polar(p), false).first;
  bool ok = (direct == polar_side);

  // Closest facet of P: minimize squared distance offset² / |a|² over facets.
  const auto& hs = p.halfspaces();
  std::size_t best = 0;
  S best_num = hs[0].offset * hs[0].offset;
  S best_den = dot(hs[0].normal, hs[0].normal);
  for (std::size_t i = 1; i < hs.size(); ++i) {
    const S num = hs[i].offset * hs[i].offset;
    const S den = dot(hs[i].normal, hs[i].normal);
    if (num * best_den < best_num * den) {
      best = i;
      best_num = num;
      best_den = den;
    }
  }
  // Foot of the perpendicular: v = a * rho / (a.a); |v|² = rho²/(a.a).
  const S vnorm2 = best_num / best_den;
  auto outer = scale(p, S(1) / vnorm2);
  try {
    ok = ok && is_optimally_contained(polar(p), outer, false).first;
  } catch (const NotContained&) {
    ok = false;
  }
  return ok;
}

}  // namespace sym

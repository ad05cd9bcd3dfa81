#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "sym/circumradius.hpp"
#include "sym/errors.hpp"
#include "sym/linalg.hpp"
#include "sym/polytope.hpp"
#include "sym/scalar.hpp"

namespace sym {

// Polar body {a : a.x <= 1 for all x in P}. For a polytope with 0 strictly
// interior this swaps vertices and facets exactly: facet (a, rho) becomes the
// vertex a/rho, vertex v becomes the facet v.x <= 1.
template <typename S>
Polytope<S> polar(const Polytope<S>& p) {
  if (!origin_interior(p)) throw OriginNotInterior("polar requires 0 strictly inside");
  std::vector<Vec<S>> verts;
  verts.reserve(p.halfspaces().size());
  for (const auto& h : p.halfspaces()) {
    Vec<S> v(p.dim);
    for (std::size_t j = 0; j < p.dim; ++j) v[j] = h.normal[j] / h.offset;
    verts.push_back(std::move(v));
  }
  std::vector<Halfspace<S>> hs;
  hs.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) hs.push_back({v, S(1)});
  return detail::make_trusted(p.dim, std::move(verts), std::move(hs));
}

template <typename S>
Polytope<S> scale(const Polytope<S>& p, const S& rho) {
  if (rho == S(0)) throw ZeroScale("scale factor must be nonzero");
  std::vector<Vec<S>> verts;
  verts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) verts.push_back(vec_scale(v, rho));
  std::vector<Halfspace<S>> hs;
  hs.reserve(p.halfspaces().size());
  const bool flip = rho < S(0);
  for (const auto& h : p.halfspaces()) {
    Vec<S> a = flip ? vec_neg(h.normal) : h.normal;
    S off = flip ? S(-rho * h.offset) : S(rho * h.offset);
    hs.push_back({std::move(a), std::move(off)});
  }
  return detail::make_trusted(p.dim, std::move(verts), std::move(hs));
}

template <typename S>
Polytope<S> negate(const Polytope<S>& p) {
  return scale(p, S(-1));
}

template <typename S>
Polytope<S> minkowski_sum(const Polytope<S>& p, const Polytope<S>& q) {
  if (p.dim != q.dim) throw DimensionMismatch("minkowski_sum: dimension mismatch");
  std::vector<Vec<S>> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& v : p.vertices())
    for (const auto& w : q.vertices()) sums.push_back(vec_add(v, w));
  return make_from_vrep(sums);
}

template <typename S>
Polytope<S> intersect(const Polytope<S>& p, const Polytope<S>& q) {
  if (p.dim != q.dim) throw DimensionMismatch("intersect: dimension mismatch");
  std::vector<Halfspace<S>> hs = p.halfspaces();
  hs.insert(hs.end(), q.halfspaces().begin(), q.halfspaces().end());
  try {
    return make_from_hrep(hs);
  } catch (const EmptyOrLowerDimensional& e) {
    throw EmptyOrLowerDimensionalIntersection(e.what());
  }
}

template <typename S>
Polytope<S> hull_union(const Polytope<S>& p, const Polytope<S>& q) {
  if (p.dim != q.dim) throw DimensionMismatch("hull_union: dimension mismatch");
  std::vector<Vec<S>> pts = p.vertices();
  pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
  return make_from_vrep(pts);
}

template <typename S>
Polytope<S> arithmetic_mean(const Polytope<S>& k, const Polytope<S>& c) {
  return scale(minkowski_sum(k, c), S(1) / S(2));
}

template <typename S>
Polytope<S> harmonic_mean(const Polytope<S>& k, const Polytope<S>& c) {
  return polar(arithmetic_mean(polar(k), polar(c)));
}

template <typename S>
struct MeansBundle {
  Polytope<S> minimum;     // K ∩ C
  Polytope<S> harmonic;    // polar of the mean of the polars
  Polytope<S> arithmetic;  // (K + C)/2
  Polytope<S> maximum;     // conv(K ∪ C)
};

// The four means of a pair, nested minimum ⊆ harmonic ⊆ arithmetic ⊆ maximum.
// The nesting is verified by vertex membership before returning.
template <typename S>
MeansBundle<S> means_bundle(const Polytope<S>& k, const Polytope<S>& c) {
  MeansBundle<S> b{intersect(k, c), harmonic_mean(k, c), arithmetic_mean(k, c),
                   hull_union(k, c)};
  auto nested = [](const Polytope<S>& inner, const Polytope<S>& outer) {
    for (const auto& v : inner.vertices())
      if (!contains_point(outer, v)) return false;
    return true;
  };
  if (!nested(b.minimum, b.harmonic) || !nested(b.harmonic, b.arithmetic) ||
      !nested(b.arithmetic, b.maximum))
    throw NumericFailure("mean chain nesting violated");
  return b;
}

// The four symmetrizations: the means of C and -C.
template <typename S>
MeansBundle<S> four_symmetrizations(const Polytope<S>& c) {
  if (!origin_interior(c)) throw OriginNotInterior("symmetrizations need 0 inside");
  return means_bundle(c, negate(c));
}

// Gauge of x with respect to P (0 interior): smallest rho >= 0 with x in
// rho*P, computed as the largest facet ratio clamped at zero.
template <typename S>
S gauge(const Polytope<S>& p, const Vec<S>& x) {
  if (!origin_interior(p)) throw OriginNotInterior("gauge requires 0 strictly inside");
  if (x.size() != p.dim) throw DimensionMismatch("gauge: dimension mismatch");
  S best(0);
  for (const auto& h : p.halfspaces()) {
    const S ratio = dot(h.normal, x) / h.offset;
    if (ratio > best) best = ratio;
  }
  return best;
}

// Support function h_P(a) = max over vertices of a.v.
template <typename S>
S support(const Polytope<S>& p, const Vec<S>& a) {
  if (a.size() != p.dim) throw DimensionMismatch("support: dimension mismatch");
  bool first = true;
  S best(0);
  for (const auto& v : p.vertices()) {
    const S val = dot(a, v);
    if (first || val > best) {
      best = val;
      first = false;
    }
  }
  return best;
}

// Diameter of K relative to C: twice the largest two-point circumradius,
// maximized over vertex pairs of K (extreme-point argument).
template <typename S>
S diameter(const Polytope<S>& k, const Polytope<S>& c) {
  if (k.dim != c.dim) throw DimensionMismatch("diameter: dimension mismatch");
  const auto& vs = k.vertices();
  S best(0);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      auto r = circumradius_points<S>({vs[i], vs[j]}, c);
      if (r.rho > best) best = r.rho;
    }
  return S(2) * best;
}

// Largest gauge distance between two points of K, over ordered vertex pairs.
template <typename S>
S diameter_max(const Polytope<S>& k, const Polytope<S>& c) {
  if (k.dim != c.dim) throw DimensionMismatch("diameter_max: dimension mismatch");
  if (!origin_interior(c)) throw OriginNotInterior("diameter_max requires 0 inside C");
  const auto& vs = k.vertices();
  S best(0);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j) continue;
      const S g = gauge(c, vec_sub(vs[i], vs[j]));
      if (g > best) best = g;
    }
  return best;
}

}  // namespace sym

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sym/dd.hpp"
#include "sym/errors.hpp"
#include "sym/linalg.hpp"
#include "sym/lp.hpp"
#include "sym/scalar.hpp"

namespace sym {

template <typename S>
struct Halfspace {
  Vec<S> normal;  // a
  S offset;       // rho, meaning a . x <= rho
};

template <typename S>
struct VRep {
  std::vector<Vec<S>> vertices;
};

template <typename S>
struct HRep {
  std::vector<Halfspace<S>> halfspaces;
};

namespace detail {

// --- canonical forms -------------------------------------------------------
//
// Exact scalars: normals scaled so the largest absolute coordinate is 1;
// approximate scalars: normals scaled to unit Euclidean length. Both reps are
// sorted lexicographically and deduplicated, so equal bodies produce
// bit-identical representations.

template <typename S>
void canonicalize_halfspace(Halfspace<S>& h) {
  if constexpr (is_exact_v<S>) {
    const S m = norm_inf(h.normal);
    if (m > S(0)) {
      for (S& x : h.normal) x /= m;
      h.offset /= m;
    }
  } else {
    double norm2 = 0;
    for (const S& x : h.normal) norm2 += to_double(x) * to_double(x);
    const double n = std::sqrt(norm2);
    if (n > 0) {
      for (S& x : h.normal) x /= n;
      h.offset /= n;
    }
  }
}

template <typename S>
bool vec_close(const Vec<S>& a, const Vec<S>& b, const S& tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (scalar_abs(a[i] - b[i]) > tol) return false;
  return true;
}

template <typename S>
std::vector<Vec<S>> canonical_point_set(std::vector<Vec<S>> pts) {
  const S tol = scalar_tolerance<S>();
  std::sort(pts.begin(), pts.end(), lex_less<S>);
  std::vector<Vec<S>> out;
  for (auto& p : pts) {
    if (!out.empty() && vec_close(out.back(), p, S(10) * tol)) continue;
    out.push_back(std::move(p));
  }
  return out;
}

template <typename S>
HRep<S> canonical_hrep(std::vector<Halfspace<S>> hs) {
  const S tol = scalar_tolerance<S>();
  for (auto& h : hs) canonicalize_halfspace(h);
  auto key_less = [](const Halfspace<S>& a, const Halfspace<S>& b) {
    if (lex_less(a.normal, b.normal)) return true;
    if (lex_less(b.normal, a.normal)) return false;
    return a.offset < b.offset;
  };
  std::sort(hs.begin(), hs.end(), key_less);
  std::vector<Halfspace<S>> out;
  for (auto& h : hs) {
    if (!out.empty() && vec_close(out.back().normal, h.normal, S(10) * tol) &&
        scalar_abs(out.back().offset - h.offset) <= S(10) * tol)
      continue;
    out.push_back(std::move(h));
  }
  return HRep<S>{std::move(out)};
}

// Vertex enumeration for {x : a_i . x <= rho_i} via the homogenization
// {(x, t) : a_i . x - rho_i t <= 0, -t <= 0}; vertices are rays with t > 0.
// Throws Unbounded when a recession direction exists (including the case of
// a lineality space, which only arises for unbounded feasible sets or sets
// we do not need to distinguish further), and EmptyOrLowerDimensional when
// no ray with positive t remains.
template <typename S>
std::vector<Vec<S>> raw_vertices(const std::vector<Halfspace<S>>& hs, std::size_t dim) {
  std::vector<Vec<S>> rows;
  rows.reserve(hs.size() + 1);
  for (const auto& h : hs) {
    if (h.normal.size() != dim) throw DimensionMismatch("halfspace dimension mismatch");
    Vec<S> row = h.normal;
    row.push_back(-h.offset);
    rows.push_back(std::move(row));
  }
  Vec<S> tpos(dim + 1, S(0));
  tpos[dim] = S(-1);
  rows.push_back(std::move(tpos));

  std::vector<Vec<S>> rays;
  try {
    rays = dd::extreme_rays(std::move(rows), dim + 1);
  } catch (const NotFullDimensional&) {
    throw Unbounded("feasible set has an invariant direction");
  }

  const S tol = scalar_tolerance<S>();
  std::vector<Vec<S>> vertices;
  for (const auto& r : rays) {
    const S t = r[dim];
    if (t <= tol) throw Unbounded("feasible set has a recession direction");
    Vec<S> v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = r[i] / t;
    vertices.push_back(std::move(v));
  }
  if (vertices.empty()) throw EmptyOrLowerDimensional("no feasible points");
  return vertices;
}

// Facet enumeration for full-dimensional conv(points): shift by the centroid
// so the origin is interior, enumerate the vertices of the dual body
// {a : (p - c) . a <= 1}, and unshift each dual vertex w into the facet
// w . x <= 1 + w . c.
template <typename S>
std::vector<Halfspace<S>> raw_facets(const std::vector<Vec<S>>& pts, std::size_t dim) {
  Vec<S> centroid(dim, S(0));
  for (const auto& p : pts) centroid = vec_add(centroid, p);
  for (S& x : centroid) x /= S(static_cast<int>(pts.size()));

  std::vector<Halfspace<S>> dual;
  dual.reserve(pts.size());
  for (const auto& p : pts) dual.push_back({vec_sub(p, centroid), S(1)});
  std::vector<Vec<S>> dual_vertices = raw_vertices(dual, dim);

  std::vector<Halfspace<S>> facets;
  facets.reserve(dual_vertices.size());
  for (auto& w : dual_vertices) {
    const S rho = S(1) + dot(w, centroid);
    facets.push_back({std::move(w), rho});
  }
  return facets;
}

}  // namespace detail

template <typename S>
HRep<S> vrep_to_hrep(const VRep<S>& v) {
  if (v.vertices.empty()) throw EmptyOrLowerDimensional("no vertices");
  const std::size_t dim = v.vertices.front().size();
  for (const auto& p : v.vertices)
    if (p.size() != dim) throw DimensionMismatch("vertex dimension mismatch");
  if (affine_rank(v.vertices) != dim)
    throw NotFullDimensional("vertex set is not full-dimensional");
  return detail::canonical_hrep(detail::raw_facets(v.vertices, dim));
}

template <typename S>
VRep<S> hrep_to_vrep(const HRep<S>& h) {
  if (h.halfspaces.empty()) throw Unbounded("no halfspaces");
  const std::size_t dim = h.halfspaces.front().normal.size();
  auto vertices = detail::raw_vertices(h.halfspaces, dim);
  if (affine_rank(vertices) != dim)
    throw EmptyOrLowerDimensional("feasible set is not full-dimensional");
  return VRep<S>{detail::canonical_point_set(std::move(vertices))};
}

// A full-dimensional bounded convex polytope carrying both canonical
// representations. Construction always verifies and canonicalizes through
// the double-description conversions unless both representations are already
// known exactly (polar, affine images), in which case they are only
// re-canonicalized.
template <typename S>
struct Polytope {
  std::size_t dim = 0;
  VRep<S> vrep;
  HRep<S> hrep;

  const std::vector<Vec<S>>& vertices() const { return vrep.vertices; }
  const std::vector<Halfspace<S>>& halfspaces() const { return hrep.halfspaces; }
};

template <typename S>
Polytope<S> make_from_vrep(const std::vector<Vec<S>>& pts) {
  HRep<S> h = vrep_to_hrep(VRep<S>{pts});
  // Re-enumerate vertices to drop non-extreme input points and canonicalize.
  VRep<S> v = hrep_to_vrep(h);
  return Polytope<S>{pts.front().size(), std::move(v), std::move(h)};
}

template <typename S>
Polytope<S> make_from_hrep(const std::vector<Halfspace<S>>& hs) {
  VRep<S> v = hrep_to_vrep(HRep<S>{hs});
  // Re-derive facets so the stored H-representation is irredundant.
  HRep<S> h = vrep_to_hrep(v);
  return Polytope<S>{hs.front().normal.size(), std::move(v), std::move(h)};
}

namespace detail {

// Trusted constructor for operations that map both representations exactly
// (polar, negation, scaling, affine images). Skips the double-description
// round trip and only restores canonical form.
template <typename S>
Polytope<S> make_trusted(std::size_t dim, std::vector<Vec<S>> vertices,
                         std::vector<Halfspace<S>> halfspaces) {
  return Polytope<S>{dim, VRep<S>{canonical_point_set(std::move(vertices))},
                     canonical_hrep(std::move(halfspaces))};
}

}  // namespace detail

// Chebyshev-style interior point: maximizes the uniform slack r (capped at 1)
// over all facets with unit-scaled normals. Throws NoInterior when the best
// slack is not strictly positive.
template <typename S>
Vec<S> interior_point(const Polytope<S>& p) {
  const std::size_t dim = p.dim;
  LinearProgram<S> lp;
  lp.sense = Sense::Maximize;
  lp.objective = Vec<S>(dim + 1, S(0));
  lp.objective[dim] = S(1);
  for (const auto& h : p.halfspaces()) {
    Vec<S> row = h.normal;
    row.push_back(S(1));
    lp.constraints.push_back({std::move(row), Relation::LessEqual, h.offset});
  }
  Vec<S> cap(dim + 1, S(0));
  cap[dim] = S(1);
  lp.constraints.push_back({std::move(cap), Relation::LessEqual, S(1)});
  lp.bounds.assign(dim + 1, VariableBounds<S>{});
  auto sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw NumericFailure("interior point search did not converge");
  if (!(sol.primal[dim] > scalar_tolerance<S>()))
    throw NoInterior("polytope has empty interior");
  Vec<S> x(sol.primal.begin(), sol.primal.begin() + dim);
  return x;
}

template <typename S>
bool contains_point(const Polytope<S>& p, const Vec<S>& x) {
  const S tol = scalar_tolerance<S>();
  for (const auto& h : p.halfspaces())
    if (dot(h.normal, x) > h.offset + tol) return false;
  return true;
}

// Geometric equality: identical vertex sets up to `tol`, matched as sets so
// near-tied canonical orderings cannot cause false negatives.
template <typename S>
bool same_geometry(const Polytope<S>& p, const Polytope<S>& q, double tol) {
  const auto& a = p.vertices();
  const auto& b = q.vertices();
  if (p.dim != q.dim || a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& v : a) {
    bool matched = false;
    for (std::size_t i = 0; i < b.size() && !matched; ++i) {
      if (used[i]) continue;
      bool eq = true;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (to_double(scalar_abs(v[j] - b[i][j])) > tol) {
          eq = false;
          break;
        }
      if (eq) {
        used[i] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

// True when 0 lies strictly inside P: every canonical facet offset positive.
template <typename S>
bool origin_interior(const Polytope<S>& p) {
  const S tol = scalar_tolerance<S>();
  for (const auto& h : p.halfspaces())
    if (!(h.offset > tol)) return false;
  return true;
}

// True when P = -P as a vertex set (up to tolerance).
template <typename S>
bool is_zero_symmetric(const Polytope<S>& p, double tol) {
  const auto& vs = p.vertices();
  for (const auto& v : vs) {
    bool found = false;
    for (const auto& w : vs) {
      bool eq = true;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (to_double(scalar_abs(v[j] + w[j])) > tol) {
          eq = false;
          break;
        }
      if (eq) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

template <typename S>
Polytope<S> translate(const Polytope<S>& p, const Vec<S>& t) {
  if (t.size() != p.dim) throw DimensionMismatch("translate: dimension mismatch");
  std::vector<Vec<S>> verts;
  verts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) verts.push_back(vec_add(v, t));
  std::vector<Halfspace<S>> hs;
  hs.reserve(p.halfspaces().size());
  for (const auto& h : p.halfspaces()) hs.push_back({h.normal, h.offset + dot(h.normal, t)});
  return detail::make_trusted(p.dim, std::move(verts), std::move(hs));
}

// Image under an invertible linear map: vertices map by A, halfspaces by the
// inverse transpose, (a, rho) -> (A^{-T} a, rho).
template <typename S>
Polytope<S> linear_image(const Polytope<S>& p, const Matrix<S>& a) {
  if (a.rows != p.dim || a.cols != p.dim)
    throw DimensionMismatch("linear_image: matrix shape mismatch");
  auto inv = invert(a);
  if (!inv) throw SingularMatrix("linear_image: matrix is singular");
  std::vector<Vec<S>> verts;
  verts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) verts.push_back(mat_vec(a, v));
  std::vector<Halfspace<S>> hs;
  hs.reserve(p.halfspaces().size());
  for (const auto& h : p.halfspaces()) {
    // normal' = A^{-T} a, i.e. components (inv^T a)_j = sum_i inv(i,j) a_i.
    Vec<S> n(p.dim, S(0));
    for (std::size_t j = 0; j < p.dim; ++j)
      for (std::size_t i = 0; i < p.dim; ++i) n[j] += inv->at(i, j) * h.normal[i];
    hs.push_back({std::move(n), h.offset});
  }
  return detail::make_trusted(p.dim, std::move(verts), std::move(hs));
}

}  // namespace sym

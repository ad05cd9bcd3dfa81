#pragma once

#include <vector>

#include "sym/errors.hpp"
#include "sym/linalg.hpp"
#include "sym/lp.hpp"
#include "sym/polytope.hpp"
#include "sym/scalar.hpp"

namespace sym {

template <typename S>
struct CircumradiusResult {
  S rho;          // smallest dilatation factor
  Vec<S> t;       // translation achieving it (points sit in rho*C + t)
  LpSolution<S> lp;  // full solution; duals certify optimality
};

// Smallest rho >= 0 with {points} subset of rho*C + t for some translation t.
// C must contain 0 in its interior; its facets are normalized to offset 1 so
// each constraint reads a.(v - t) <= rho. Variables are (rho, t), all free.
template <typename S>
CircumradiusResult<S> circumradius_points(const std::vector<Vec<S>>& points,
                                          const Polytope<S>& c) {
  if (points.empty()) throw DimensionMismatch("no points given");
  const std::size_t n = c.dim;
  for (const auto& p : points)
    if (p.size() != n) throw DimensionMismatch("point/body dimension mismatch");
  if (!origin_interior(c)) throw OriginNotInterior("outer body must contain 0 strictly");

  LinearProgram<S> lp;
  lp.sense = Sense::Minimize;
  lp.objective = Vec<S>(n + 1, S(0));
  lp.objective[0] = S(1);
  for (const auto& v : points) {
    for (const auto& h : c.halfspaces()) {
      // a.v - a.t <= rho * offset; divide by offset (> 0) to normalize.
      Vec<S> row(n + 1);
      row[0] = S(-1);
      for (std::size_t j = 0; j < n; ++j) row[j + 1] = -h.normal[j] / h.offset;
      lp.constraints.push_back({std::move(row), Relation::LessEqual,
                                S(-dot(h.normal, v) / h.offset)});
    }
  }
  lp.bounds.assign(n + 1, VariableBounds<S>{});
  auto sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw NumericFailure("circumradius LP did not reach an optimum");
  CircumradiusResult<S> r;
  r.rho = sol.primal[0];
  r.t = Vec<S>(sol.primal.begin() + 1, sol.primal.begin() + 1 + n);
  r.lp = std::move(sol);
  return r;
}

}  // namespace sym

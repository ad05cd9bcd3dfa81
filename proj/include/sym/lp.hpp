#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "sym/errors.hpp"
#include "sym/linalg.hpp"
#include "sym/scalar.hpp"

namespace sym {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename S>
struct LpConstraint {
  Vec<S> row;
  Relation relation = Relation::LessEqual;
  S rhs = S(0);
};

template <typename S>
struct VariableBounds {
  std::optional<S> lower;
  std::optional<S> upper;
};

template <typename S>
struct LinearProgram {
  Vec<S> objective;
  Sense sense = Sense::Minimize;
  std::vector<LpConstraint<S>> constraints;
  // Either empty (all variables free) or one entry per variable.
  std::vector<VariableBounds<S>> bounds;
};

template <typename S>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  S value = S(0);
  Vec<S> primal;
  // One multiplier per constraint (bounds excluded). Sign convention:
  // for a minimization, <= rows carry y <= 0, >= rows y >= 0, = rows free;
  // for a maximization the signs flip. In both cases
  // sum_i dual[i]*rhs[i] (+ bound-row contributions) equals the value.
  Vec<S> dual;
  // Dual objective over every row including bound rows; equals `value`
  // exactly at optimality on the exact backend (strong duality).
  S dual_objective = S(0);
};

namespace detail {

// Dense two-phase primal simplex. Free variables are split into positive
// parts; variable bounds become explicit rows so that dual multipliers are
// available uniformly.
template <typename S>
class SimplexSolver {
public:
  explicit SimplexSolver(const LinearProgram<S>& lp) : lp_(lp) { build(); }

  LpSolution<S> solve() {
    LpSolution<S> out;
    if (!phase1()) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    if (!phase2()) {
      out.status = LpStatus::Unbounded;
      return out;
    }
    extract(out);
    return out;
  }

private:
  const LinearProgram<S>& lp_;
  S tol_ = scalar_tolerance<S>();

  std::size_t nvars_ = 0;        // user variables
  std::size_t nstruct_ = 0;      // split structural columns (2 * nvars)
  std::size_t ncols_ = 0;        // structural + slack/surplus + artificial
  std::size_t nrows_ = 0;
  std::vector<Vec<S>> tab_;      // nrows x (ncols + 1); last column is rhs
  Vec<S> obj_;                   // reduced-cost row, last entry = -objective value
  std::vector<std::size_t> basis_;
  std::vector<bool> negated_;    // row sign-flipped to make rhs nonnegative
  std::vector<Relation> rel_;    // relation after sign flip
  Vec<S> rhs_original_;          // per row, before the sign flip
  std::vector<std::size_t> identity_col_;  // slack or artificial col per row
  std::vector<bool> artificial_col_;
  Vec<S> cost2_;                 // phase-2 costs per column

  void build() {
    nvars_ = lp_.objective.size();
    for (const auto& c : lp_.constraints)
      if (c.row.size() != nvars_) throw DimensionMismatch("lp: constraint row length");
    if (!lp_.bounds.empty() && lp_.bounds.size() != nvars_)
      throw DimensionMismatch("lp: bounds length");

    struct RawRow {
      Vec<S> a;
      Relation rel;
      S b;
    };
    std::vector<RawRow> raw;
    for (const auto& c : lp_.constraints) raw.push_back({c.row, c.relation, c.rhs});
    for (std::size_t j = 0; j < lp_.bounds.size(); ++j) {
      Vec<S> unit(nvars_, S(0));
      unit[j] = S(1);
      if (lp_.bounds[j].lower) raw.push_back({unit, Relation::GreaterEqual, *lp_.bounds[j].lower});
      if (lp_.bounds[j].upper) raw.push_back({unit, Relation::LessEqual, *lp_.bounds[j].upper});
    }

    nrows_ = raw.size();
    nstruct_ = 2 * nvars_;
    negated_.assign(nrows_, false);
    rel_.resize(nrows_);
    rhs_original_.resize(nrows_);
    identity_col_.assign(nrows_, 0);

    // Count slack/surplus and artificial columns.
    std::size_t extra = 0, artificial = 0;
    for (std::size_t i = 0; i < nrows_; ++i) {
      RawRow& r = raw[i];
      rhs_original_[i] = r.b;
      if (r.b < S(0)) {
        negated_[i] = true;
        r.b = -r.b;
        for (S& v : r.a) v = -v;
        if (r.rel == Relation::LessEqual)
          r.rel = Relation::GreaterEqual;
        else if (r.rel == Relation::GreaterEqual)
          r.rel = Relation::LessEqual;
      }
      rel_[i] = r.rel;
      if (r.rel != Relation::Equal) ++extra;
      if (r.rel != Relation::LessEqual) ++artificial;
    }
    ncols_ = nstruct_ + extra + artificial;
    artificial_col_.assign(ncols_, false);

    tab_.assign(nrows_, Vec<S>(ncols_ + 1, S(0)));
    basis_.assign(nrows_, 0);
    std::size_t next_extra = nstruct_;
    std::size_t next_art = nstruct_ + extra;
    for (std::size_t i = 0; i < nrows_; ++i) {
      for (std::size_t j = 0; j < nvars_; ++j) {
        tab_[i][2 * j] = raw[i].a[j];
        tab_[i][2 * j + 1] = -raw[i].a[j];
      }
      tab_[i][ncols_] = raw[i].b;
      if (rel_[i] == Relation::LessEqual) {
        tab_[i][next_extra] = S(1);
        basis_[i] = next_extra;
        identity_col_[i] = next_extra;
        ++next_extra;
      } else {
        if (rel_[i] == Relation::GreaterEqual) tab_[i][next_extra++] = S(-1);
        tab_[i][next_art] = S(1);
        artificial_col_[next_art] = true;
        basis_[i] = next_art;
        identity_col_[i] = next_art;
        ++next_art;
      }
    }
  }

  void pivot(std::size_t prow, std::size_t pcol) {
    Vec<S>& pr = tab_[prow];
    const S pivot = pr[pcol];
    for (S& v : pr) v /= pivot;
    pr[pcol] = S(1);
    for (std::size_t i = 0; i < nrows_; ++i) {
      if (i == prow) continue;
      const S f = tab_[i][pcol];
      if (f == S(0)) continue;
      Vec<S>& row = tab_[i];
      for (std::size_t j = 0; j <= ncols_; ++j) row[j] -= f * pr[j];
      row[pcol] = S(0);
    }
    const S fo = obj_[pcol];
    if (fo != S(0)) {
      for (std::size_t j = 0; j <= ncols_; ++j) obj_[j] -= fo * pr[j];
      obj_[pcol] = S(0);
    }
    basis_[prow] = pcol;
  }

  // Entering column, or none when the reduced costs are optimal.
  std::optional<std::size_t> entering(bool allow_artificial) const {
    if constexpr (is_exact_v<S>) {
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (!allow_artificial && artificial_col_[j]) continue;
        if (obj_[j] < S(0)) return j;  // Bland: first improving column
      }
      return std::nullopt;
    } else {
      std::optional<std::size_t> best;
      S best_val = -tol_;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (!allow_artificial && artificial_col_[j]) continue;
        if (obj_[j] < best_val) {
          best_val = obj_[j];
          best = j;
        }
      }
      return best;
    }
  }

  // Leaving row by minimum ratio; Bland tie-break on the exact backend,
  // lexicographic comparison of scaled rows otherwise.
  std::optional<std::size_t> leaving(std::size_t col) const {
    std::optional<std::size_t> best;
    S best_ratio(0);
    for (std::size_t i = 0; i < nrows_; ++i) {
      const S& a = tab_[i][col];
      if (!(a > tol_)) continue;
      const S ratio = tab_[i][ncols_] / a;
      if (!best) {
        best = i;
        best_ratio = ratio;
        continue;
      }
      if constexpr (is_exact_v<S>) {
        if (ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*best])) {
          best = i;
          best_ratio = ratio;
        }
      } else {
        if (ratio < best_ratio - tol_) {
          best = i;
          best_ratio = ratio;
        } else if (ratio <= best_ratio + tol_ && lex_smaller_scaled(i, *best, col)) {
          best = i;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
    }
    return best;
  }

  bool lex_smaller_scaled(std::size_t i, std::size_t k, std::size_t col) const {
    const S ai = tab_[i][col], ak = tab_[k][col];
    // Compare rhs first, then the full rows, both scaled by the pivot entry.
    S ri = tab_[i][ncols_] / ai, rk = tab_[k][ncols_] / ak;
    if (ri < rk - tol_) return true;
    if (rk < ri - tol_) return false;
    for (std::size_t j = 0; j < ncols_; ++j) {
      ri = tab_[i][j] / ai;
      rk = tab_[k][j] / ak;
      if (ri < rk - tol_) return true;
      if (rk < ri - tol_) return false;
    }
    return false;
  }

  bool run(bool allow_artificial) {
    const std::size_t cap = 20000 + 200 * (nrows_ + ncols_);
    for (std::size_t iter = 0; iter < cap; ++iter) {
      auto col = entering(allow_artificial);
      if (!col) return true;  // optimal for the current objective
      auto row = leaving(*col);
      if (!row) {
        // Phase 1 minimizes the artificial sum, which is bounded below by
        // zero, so no genuinely unbounded direction exists there. On the
        // floating backend a failed ratio test in that phase means the
        // column's improving reduced cost was rounding noise (every entry at
        // or below the pivot tolerance); discard the column and continue.
        if (allow_artificial && !is_exact_v<S>) {
          obj_[*col] = S(0);
          continue;
        }
        return false;  // unbounded direction
      }
      pivot(*row, *col);
    }
    throw NumericFailure("simplex: iteration cap exceeded");
  }

  bool phase1() {
    obj_.assign(ncols_ + 1, S(0));
    for (std::size_t j = 0; j < ncols_; ++j)
      if (artificial_col_[j]) obj_[j] = S(1);
    for (std::size_t i = 0; i < nrows_; ++i) {
      if (!artificial_col_[basis_[i]]) continue;
      for (std::size_t j = 0; j <= ncols_; ++j) obj_[j] -= tab_[i][j];
    }
    if (!run(/*allow_artificial=*/true))
      throw NumericFailure("simplex: phase 1 unbounded");
    const S infeas = -obj_[ncols_];  // current phase-1 objective value
    if (infeas > (is_exact_v<S> ? S(0) : tol_)) return false;

    // Pivot artificials out of the basis wherever a non-artificial column
    // allows it; rows that stay artificial-basic are redundant and remain at
    // level zero.
    for (std::size_t i = 0; i < nrows_; ++i) {
      if (!artificial_col_[basis_[i]]) continue;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (artificial_col_[j]) continue;
        if (scalar_abs(tab_[i][j]) > tol_) {
          pivot(i, j);
          break;
        }
      }
    }
    return true;
  }

  bool phase2() {
    cost2_.assign(ncols_, S(0));
    const bool maximize = lp_.sense == Sense::Maximize;
    for (std::size_t j = 0; j < nvars_; ++j) {
      const S c = maximize ? S(-lp_.objective[j]) : lp_.objective[j];
      cost2_[2 * j] = c;
      cost2_[2 * j + 1] = -c;
    }
    obj_.assign(ncols_ + 1, S(0));
    for (std::size_t j = 0; j < ncols_; ++j) obj_[j] = cost2_[j];
    for (std::size_t i = 0; i < nrows_; ++i) {
      const S cb = cost2_[basis_[i]];
      if (cb == S(0)) continue;
      for (std::size_t j = 0; j <= ncols_; ++j) obj_[j] -= cb * tab_[i][j];
    }
    return run(/*allow_artificial=*/false);
  }

  void extract(LpSolution<S>& out) {
    const bool maximize = lp_.sense == Sense::Maximize;
    Vec<S> z(ncols_, S(0));
    for (std::size_t i = 0; i < nrows_; ++i) z[basis_[i]] = tab_[i][ncols_];
    out.primal.assign(nvars_, S(0));
    for (std::size_t j = 0; j < nvars_; ++j) out.primal[j] = z[2 * j] - z[2 * j + 1];
    out.value = dot(lp_.objective, out.primal);

    // Multipliers read from the reduced costs of each row's identity column
    // (slack or artificial, both carry zero phase-2 cost): y_i = -obj_[id].
    Vec<S> y(nrows_, S(0));
    for (std::size_t i = 0; i < nrows_; ++i) {
      S yi = -obj_[identity_col_[i]];
      if (negated_[i]) yi = -yi;
      if (maximize) yi = -yi;
      y[i] = yi;
    }
    out.dual_objective = S(0);
    for (std::size_t i = 0; i < nrows_; ++i) out.dual_objective += y[i] * rhs_original_[i];
    out.dual.assign(y.begin(), y.begin() + lp_.constraints.size());
    out.status = LpStatus::Optimal;
  }
};

// Independent optimality audit for the floating backend. A solution claimed
// optimal must satisfy, to a scaled tolerance: primal feasibility (constraint
// rows and variable bounds), dual sign feasibility, stationarity of the
// Lagrangian when every variable is free, and a zero duality gap. A genuine
// vertex optimum meets all four to machine precision; a tableau that drifted
// misses them by orders of magnitude.
template <typename S>
bool kkt_verified(const LinearProgram<S>& lp, const LpSolution<S>& sol) {
  constexpr double tol = 1e-6;
  const std::size_t nvars = lp.objective.size();
  const std::size_t nrows = lp.constraints.size();

  for (std::size_t i = 0; i < nrows; ++i) {
    const auto& c = lp.constraints[i];
    double ax = 0.0;
    double scale = std::max(1.0, std::fabs(to_double(c.rhs)));
    for (std::size_t j = 0; j < nvars; ++j) {
      const double term = to_double(c.row[j]) * to_double(sol.primal[j]);
      ax += term;
      scale = std::max(scale, std::fabs(term));
    }
    const double resid = ax - to_double(c.rhs);
    if (c.relation == Relation::LessEqual && resid > tol * scale) return false;
    if (c.relation == Relation::GreaterEqual && resid < -tol * scale) return false;
    if (c.relation == Relation::Equal && std::fabs(resid) > tol * scale) return false;
  }

  bool any_bounds = false;
  for (std::size_t j = 0; j < lp.bounds.size(); ++j) {
    const auto& b = lp.bounds[j];
    const double xj = to_double(sol.primal[j]);
    if (b.lower) {
      any_bounds = true;
      const double lo = to_double(*b.lower);
      if (xj < lo - tol * std::max(1.0, std::fabs(lo))) return false;
    }
    if (b.upper) {
      any_bounds = true;
      const double hi = to_double(*b.upper);
      if (xj > hi + tol * std::max(1.0, std::fabs(hi))) return false;
    }
  }

  // Dual sign feasibility, expressed in the minimization convention.
  const double flip = lp.sense == Sense::Maximize ? -1.0 : 1.0;
  double ymax = 1.0;
  for (std::size_t i = 0; i < nrows; ++i) {
    ymax = std::max(ymax, std::fabs(to_double(sol.dual[i])));
  }
  for (std::size_t i = 0; i < nrows; ++i) {
    const double y = flip * to_double(sol.dual[i]);
    if (lp.constraints[i].relation == Relation::LessEqual && y > tol * ymax) return false;
    if (lp.constraints[i].relation == Relation::GreaterEqual && y < -tol * ymax) return false;
  }

  // Stationarity: the constraint multipliers must reproduce the objective
  // gradient. Only checkable when no variable carries explicit bounds,
  // because bound-row multipliers are not part of `dual`.
  if (!any_bounds) {
    for (std::size_t j = 0; j < nvars; ++j) {
      double r = to_double(lp.objective[j]);
      double scale = std::max(1.0, std::fabs(r));
      for (std::size_t i = 0; i < nrows; ++i) {
        const double term = to_double(sol.dual[i]) * to_double(lp.constraints[i].row[j]);
        r -= term;
        scale = std::max(scale, std::fabs(term));
      }
      if (std::fabs(r) > tol * scale) return false;
    }
  }

  const double value = to_double(sol.value);
  const double dual_value = to_double(sol.dual_objective);
  const double vscale = std::max({1.0, std::fabs(value), std::fabs(dual_value)});
  return std::fabs(value - dual_value) <= tol * vscale;
}

// Deterministic constraint orderings tried when a floating-point solve fails
// the optimality audit: identity, reversal, a rotation, an even/odd split,
// and a reversed rotation.
inline std::vector<std::size_t> constraint_order(std::size_t attempt, std::size_t m) {
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  if (m < 2) return order;
  switch (attempt) {
    case 1:
      std::reverse(order.begin(), order.end());
      break;
    case 2: {
      const std::size_t shift = m / 2 + 1;
      for (std::size_t i = 0; i < m; ++i) order[i] = (i + shift) % m;
      break;
    }
    case 3: {
      std::size_t k = 0;
      for (std::size_t i = 0; i < m; i += 2) order[k++] = i;
      for (std::size_t i = 1; i < m; i += 2) order[k++] = i;
      break;
    }
    case 4: {
      const std::size_t shift = m / 3 + 1;
      for (std::size_t i = 0; i < m; ++i) order[i] = (i + shift) % m;
      std::reverse(order.begin(), order.end());
      break;
    }
    default:
      break;
  }
  return order;
}

}  // namespace detail

// Solves the program with a dense two-phase primal simplex. The exact backend
// returns the single-shot result: rational pivoting cannot drift. The floating
// backend audits every claimed optimum against the KKT conditions and, when
// the audit fails or the solver aborts numerically, retries under
// deterministic constraint reorderings; weak duality makes an audited optimum
// trustworthy no matter which pivot path produced it.
template <typename S>
LpSolution<S> solve_lp(const LinearProgram<S>& lp) {
  if constexpr (is_exact_v<S>) {
    detail::SimplexSolver<S> solver(lp);
    return solver.solve();
  } else {
    constexpr std::size_t kAttempts = 5;
    std::string last_failure = "no attempt ran";
    for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
      const auto order = detail::constraint_order(attempt, lp.constraints.size());
      LinearProgram<S> work;
      const LinearProgram<S>* problem = &lp;
      if (attempt > 0) {
        work = lp;
        for (std::size_t i = 0; i < order.size(); ++i) {
          work.constraints[i] = lp.constraints[order[i]];
        }
        problem = &work;
      }
      LpSolution<S> sol;
      try {
        detail::SimplexSolver<S> solver(*problem);
        sol = solver.solve();
      } catch (const NumericFailure& e) {
        last_failure = e.what();
        continue;
      }
      if (sol.status != LpStatus::Optimal) return sol;
      if (attempt > 0) {
        Vec<S> dual(lp.constraints.size(), S(0));
        for (std::size_t i = 0; i < order.size(); ++i) dual[order[i]] = sol.dual[i];
        sol.dual = std::move(dual);
      }
      if (detail::kkt_verified(lp, sol)) return sol;
      last_failure = "claimed optimum failed the independent optimality audit";
    }
    throw NumericFailure("simplex: no constraint ordering produced a verifiable optimum (" +
                         last_failure + ")");
  }
}

}  // namespace sym

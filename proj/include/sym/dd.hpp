#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "sym/errors.hpp"
#include "sym/linalg.hpp"
#include "sym/scalar.hpp"

namespace sym {
namespace dd {

template <typename S>
void normalize_ray(Vec<S>& r) {
  if constexpr (is_exact_v<S>) {
    S m = norm_inf(r);
    if (m > S(0))
      for (S& x : r) x /= m;
  } else {
    double norm2 = 0;
    for (const S& x : r) norm2 += to_double(x) * to_double(x);
    const double n = std::sqrt(norm2);
    if (n > 0)
      for (S& x : r) x /= n;
  }
}

// Extreme rays of the polyhedral cone {x in R^d : row . x <= 0 for all rows},
// computed by incremental double description with combinatorial adjacency.
// Requires a pointed cone; throws NotFullDimensional when the rows do not
// span R^d (the cone then has a nontrivial lineality space).
template <typename S>
std::vector<Vec<S>> extreme_rays(std::vector<Vec<S>> rows, std::size_t d) {
  const S tol = scalar_tolerance<S>();
  for (auto& r : rows) normalize_ray(r);

  // Greedy selection of d linearly independent rows for the initial basis.
  std::vector<std::size_t> basis_rows;
  {
    Matrix<S> probe(0, d);
    std::vector<Vec<S>> chosen;
    for (std::size_t i = 0; i < rows.size() && basis_rows.size() < d; ++i) {
      chosen.push_back(rows[i]);
      Matrix<S> m(chosen.size(), d);
      for (std::size_t r = 0; r < chosen.size(); ++r)
        for (std::size_t c = 0; c < d; ++c) m.at(r, c) = chosen[r][c];
      if (rank(std::move(m)) == chosen.size()) {
        basis_rows.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
  }
  if (basis_rows.size() < d)
    throw NotFullDimensional("cone rows do not span the space");

  Matrix<S> b(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) b.at(r, c) = rows[basis_rows[r]][c];
  auto binv = invert(b);
  if (!binv) throw NotFullDimensional("initial basis singular");

  // Rays of the simplicial cone: columns of -B^{-1} (ray j is tight on every
  // basis row except row j).
  std::vector<Vec<S>> rays;
  for (std::size_t j = 0; j < d; ++j) {
    Vec<S> r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = -binv->at(i, j);
    normalize_ray(r);
    rays.push_back(std::move(r));
  }

  std::vector<std::size_t> processed = basis_rows;
  std::vector<std::vector<bool>> active;  // per ray, over `processed` order
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<bool> a(d, true);
    a[j] = false;
    active.push_back(std::move(a));
  }

  auto is_processed = [&](std::size_t idx) {
    return std::find(processed.begin(), processed.end(), idx) != processed.end();
  };

  for (std::size_t ridx = 0; ridx < rows.size(); ++ridx) {
    if (is_processed(ridx)) continue;
    const Vec<S>& a = rows[ridx];

    std::vector<S> sigma(rays.size());
    std::vector<int> cls(rays.size());  // +1 violating, 0 tight, -1 interior
    for (std::size_t i = 0; i < rays.size(); ++i) {
      sigma[i] = dot(a, rays[i]);
      cls[i] = sigma[i] > tol ? 1 : (sigma[i] < -tol ? -1 : 0);
    }

    bool any_plus = false;
    for (int c : cls) any_plus |= (c == 1);
    if (!any_plus) {  // row cuts nothing; just record activity
      for (std::size_t i = 0; i < rays.size(); ++i) active[i].push_back(cls[i] == 0);
      processed.push_back(ridx);
      continue;
    }

    // Adjacency: rays p, m are adjacent iff no third ray is tight on every
    // processed row where both p and m are tight.
    auto adjacent = [&](std::size_t p, std::size_t m) {
      std::vector<std::size_t> common;
      for (std::size_t k = 0; k < processed.size(); ++k)
        if (active[p][k] && active[m][k]) common.push_back(k);
      if (common.size() + 1 < d - 1) return false;  // dimension shortcut
      for (std::size_t r = 0; r < rays.size(); ++r) {
        if (r == p || r == m) continue;
        bool covers = true;
        for (std::size_t k : common)
          if (!active[r][k]) {
            covers = false;
            break;
          }
        if (covers) return false;
      }
      return true;
    };

    std::vector<Vec<S>> next_rays;
    std::vector<std::vector<bool>> next_active;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (cls[i] == 1) continue;
      auto act = active[i];
      act.push_back(cls[i] == 0);
      next_rays.push_back(rays[i]);
      next_active.push_back(std::move(act));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (cls[p] != 1) continue;
      for (std::size_t m = 0; m < rays.size(); ++m) {
        if (cls[m] != -1) continue;
        if (!adjacent(p, m)) continue;
        Vec<S> nr(d);
        for (std::size_t c = 0; c < d; ++c)
          nr[c] = sigma[p] * rays[m][c] - sigma[m] * rays[p][c];
        normalize_ray(nr);
        // Recompute the activity pattern of the new ray from scratch.
        std::vector<bool> act(processed.size() + 1);
        for (std::size_t k = 0; k < processed.size(); ++k)
          act[k] = scalar_abs(dot(rows[processed[k]], nr)) <= tol;
        act[processed.size()] = true;
        next_rays.push_back(std::move(nr));
        next_active.push_back(std::move(act));
      }
    }
    rays = std::move(next_rays);
    active = std::move(next_active);
    processed.push_back(ridx);
  }
  return rays;
}

}  // namespace dd
}  // namespace sym

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "sym/errors.hpp"
#include "sym/scalar.hpp"

namespace sym {

template <typename S>
using Vec = std::vector<S>;

template <typename S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  S acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <typename S>
Vec<S> vec_add(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_add: length mismatch");
  Vec<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <typename S>
Vec<S> vec_sub(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_sub: length mismatch");
  Vec<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <typename S>
Vec<S> vec_scale(const Vec<S>& a, const S& c) {
  Vec<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

template <typename S>
Vec<S> vec_neg(const Vec<S>& a) {
  return vec_scale(a, S(-1));
}

template <typename S>
S norm_inf(const Vec<S>& a) {
  S m(0);
  for (const S& x : a) m = std::max(m, scalar_abs(x));
  return m;
}

// Strict lexicographic order; used for canonical vertex/facet ordering.
template <typename S>
bool lex_less(const Vec<S>& a, const Vec<S>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

template <typename S>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<S> data;  // row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, S(0)) {}

  S& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const S& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
    return m;
  }
};

template <typename S>
Vec<S> mat_vec(const Matrix<S>& m, const Vec<S>& x) {
  if (m.cols != x.size()) throw DimensionMismatch("mat_vec: size mismatch");
  Vec<S> r(m.rows, S(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * x[j];
  return r;
}

namespace detail {

// Row-echelon elimination in place; returns pivot column of each pivot row.
// Entries below tolerance count as zero. Pivots are only chosen among the
// first `pivot_limit` columns (elimination still updates the full rows), so
// augmented blocks never get pivoted on.
template <typename S>
std::vector<std::size_t> eliminate(Matrix<S>& m, const S& tol,
                                   std::size_t pivot_limit = static_cast<std::size_t>(-1)) {
  std::vector<std::size_t> pivot_cols;
  const std::size_t limit = std::min(pivot_limit, m.cols);
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < m.rows; ++col) {
    std::size_t best = row;
    S best_abs = scalar_abs(m.at(row, col));
    for (std::size_t r = row + 1; r < m.rows; ++r) {
      S a = scalar_abs(m.at(r, col));
      if (best_abs < a) {
        best = r;
        best_abs = a;
      }
    }
    if (!(best_abs > tol)) continue;
    if (best != row)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(best, c), m.at(row, c));
    const S pivot = m.at(row, col);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      const S factor = m.at(r, col) / pivot;
      if (factor == S(0)) continue;
      for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) -= factor * m.at(row, c);
      m.at(r, col) = S(0);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace detail

template <typename S>
std::size_t rank(Matrix<S> m) {
  const S tol = scalar_tolerance<S>();
  return detail::eliminate(m, tol).size();
}

// Solves A x = b for square A; empty result when A is singular.
template <typename S>
std::optional<Vec<S>> solve_square(const Matrix<S>& a, const Vec<S>& b) {
  if (a.rows != a.cols || b.size() != a.rows) throw DimensionMismatch("solve_square: shape");
  const std::size_t n = a.rows;
  Matrix<S> m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, n) = b[i];
  }
  const S tol = scalar_tolerance<S>();
  auto pivots = detail::eliminate(m, tol, n);
  if (pivots.size() != n) return std::nullopt;
  Vec<S> x(n, S(0));
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = m.at(i, n) / m.at(i, pivots[i]);
  return x;
}

template <typename S>
std::optional<Matrix<S>> invert(const Matrix<S>& a) {
  if (a.rows != a.cols) throw DimensionMismatch("invert: not square");
  const std::size_t n = a.rows;
  Matrix<S> m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, n + i) = S(1);
  }
  const S tol = scalar_tolerance<S>();
  auto pivots = detail::eliminate(m, tol, n);
  if (pivots.size() != n) return std::nullopt;
  Matrix<S> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const S pivot = m.at(i, pivots[i]);
    for (std::size_t j = 0; j < n; ++j) inv.at(pivots[i], j) = m.at(i, n + j) / pivot;
  }
  return inv;
}

// Dimension of the affine hull of a point set.
template <typename S>
std::size_t affine_rank(const std::vector<Vec<S>>& points) {
  if (points.empty()) return 0;
  Matrix<S> m(points.size() - 1, points.front().size());
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.front().size(); ++j)
      m.at(i - 1, j) = points[i][j] - points[0][j];
  return rank(std::move(m));
}

// A nonzero vector in the kernel of A, if one exists.
template <typename S>
std::optional<Vec<S>> kernel_vector(Matrix<S> m) {
  const std::size_t cols = m.cols;
  const S tol = scalar_tolerance<S>();
  auto pivots = detail::eliminate(m, tol);
  if (pivots.size() == cols) return std::nullopt;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (free_col < cols && is_pivot[free_col]) ++free_col;
  Vec<S> v(cols, S(0));
  v[free_col] = S(1);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    // After full elimination each pivot row reads: pivot*x_p + sum(free) = 0.
    v[pivots[i]] = -m.at(i, free_col) / m.at(i, pivots[i]);
  }
  return v;
}

}  // namespace sym

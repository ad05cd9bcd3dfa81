#pragma once

// Closed-form scalar companions to the measured quantities: the contraction
// factors psi/mu that sharpen the simplex bounds at high asymmetry, the three
// asymmetry thresholds gamma1/gamma2/gamma3 where optimality behaviour
// switches, and per-asymmetry lower/upper bounds for the three dilatation
// factors alpha, beta, omega.

#include <cmath>
#include <map>
#include <string>

#include "sym/errors.hpp"
#include "sym/scalar.hpp"

namespace sym {

namespace detail {

// Shared precondition for psi/mu: n >= 2 and n - 1/n < s <= n.
// Returns eps = n - s, the distance from the simplex value.
template <typename S>
S formula_gap(const char* name, int n, const S& s) {
  if (n < 2) throw DomainError(std::string(name) + ": dimension must be at least 2");
  if (S(n) * s <= S(n * n - 1))
    throw DomainError(std::string(name) + ": asymmetry must exceed n - 1/n");
  if (s > S(n))
    throw DomainError(std::string(name) + ": asymmetry cannot exceed the dimension");
  return S(n) - s;
}

// Core polynomial d(eps) = 1 - (n^2+2n)eps + (n+1)eps^2 shared by psi and mu.
// It is 1 at eps = 0 and already negative at eps = 1/n, so both factors are
// only meaningful above its first root; below it they stop being positive.
template <typename S>
S formula_core(const char* name, int n, const S& eps) {
  const S d = S(1) - S(n * n + 2 * n) * eps + S(n + 1) * eps * eps;
  if (d <= S(0))
    throw DomainError(std::string(name) +
                      ": asymmetry is below the factor's positivity range");
  return d;
}

}  // namespace detail

// psi(n, s) = (n-s+1)(s+1) / (1 - (n-s)(n + s(n+1))) - n, written here with
// eps = n - s as (1 + n(n+1)^2 eps - (n^2+n+1)eps^2) / d(eps). Evaluates to 1
// at s = n. Exact on the rational backend.
template <typename S>
S psi(int n, const S& s) {
  const S eps = detail::formula_gap("psi", n, s);
  const S d = detail::formula_core("psi", n, eps);
  const S numer =
      S(1) + S(n) * S((n + 1) * (n + 1)) * eps - S(n * n + n + 1) * eps * eps;
  return numer / d;
}

// mu(n, s) = (n+1)/(s+1) * (1 - s(n+1)(n-s)/(1 - n(n-s))), equivalently
// (n+1) d(eps) / ((n+1-eps)(1-n eps)). Evaluates to 1 at s = n. Exact on the
// rational backend. Shares psi's positivity cut: both are used as shrink
// factors and are rejected where they would turn non-positive.
template <typename S>
S mu(int n, const S& s) {
  const S eps = detail::formula_gap("mu", n, s);
  const S d = detail::formula_core("mu", n, eps);
  return S(n + 1) * d / ((S(n + 1) - eps) * (S(1) - S(n) * eps));
}

// First asymmetry threshold: the generalized golden ratio solving
// g^2 - (n-1)g - 1 = 0, i.e. g = (n-1 + sqrt((n-2)n + 5)) / 2.
inline double gamma1(int n) {
  if (n < 2) throw DomainError("gamma1: dimension must be at least 2");
  return (n - 1.0 + std::sqrt(static_cast<double>(n) * n - 2.0 * n + 5.0)) / 2.0;
}

// Second threshold: the asymmetry where psi * n/(n+1) crosses 1. With
// eps = n - s the crossing solves a*eps^2 - b*eps + 1 = 0 with
// a = n^3+2n^2+3n+1 and b = n(n+1)(n^2+2n+2); the relevant root is the small
// one, computed in the cancellation-free form 2/(b + sqrt(b^2-4a)).
inline double gamma2(int n) {
  if (n < 2) throw DomainError("gamma2: dimension must be at least 2");
  const double a = ((static_cast<double>(n) + 2.0) * n + 3.0) * n + 1.0;
  const double b = static_cast<double>(n) * (n + 1.0) * (static_cast<double>(n) * n + 2.0 * n + 2.0);
  const double eps = 2.0 / (b + std::sqrt(b * b - 4.0 * a));
  return n - eps;
}

// Third threshold: where mu * psi * n(n+2)/(n+1)^2 crosses 1. The crossing
// solves A*eps^2 - B*eps + 1 = 0 with A = n(n^3+3n^2+4n+3) and
// B = (n+1)(n^4+3n^3+3n^2+n+1); again the small root.
inline double gamma3(int n) {
  if (n < 2) throw DomainError("gamma3: dimension must be at least 2");
  const double a =
      static_cast<double>(n) * (((static_cast<double>(n) + 3.0) * n + 4.0) * n + 3.0);
  const double b = (n + 1.0) *
                   ((((static_cast<double>(n) + 3.0) * n + 3.0) * n + 1.0) * n + 1.0);
  const double eps = 2.0 / (b + std::sqrt(b * b - 4.0 * a));
  return n - eps;
}

// The thresholds of one dimension side by side with the simplex factor values
// they modulate.
struct ThresholdTable {
  int n = 0;
  double gamma1 = 0;
  double gamma2 = 0;
  double gamma3 = 0;
  double simplex_alpha = 0;  // n/(n+1)
  double simplex_beta = 0;   // n(n+2)/(n+1)^2
};

inline ThresholdTable threshold_table(int n) {
  if (n < 2) throw DomainError("threshold_table: dimension must be at least 2");
  ThresholdTable t;
  t.n = n;
  t.gamma1 = gamma1(n);
  t.gamma2 = gamma2(n);
  t.gamma3 = gamma3(n);
  t.simplex_alpha = n / (n + 1.0);
  t.simplex_beta = n * (n + 2.0) / ((n + 1.0) * (n + 1.0));
  return t;
}

// How a bound relates to the true extremal value at this (n, s):
//   ProvedEqual - the bound is attained by a known body;
//   BoundOnly   - valid bound, attainment unknown;
//   Open        - only the trivial bound is known in this range.
enum class Region { ProvedEqual, BoundOnly, Open };

inline std::string region_string(Region r) {
  switch (r) {
    case Region::ProvedEqual: return "proved-equal";
    case Region::BoundOnly: return "bound-only";
    case Region::Open: return "open";
  }
  return "unknown";
}

struct Bound {
  double value = 0;
  Region region = Region::BoundOnly;
};

// Range information for the three dilatation factors of a body with
// asymmetry s in dimension n: alpha (intersection inside hull), beta
// (harmonic inside arithmetic), omega (arithmetic inside harmonic).
// *_low bounds the smallest achievable factor, *_high the largest.
struct AlphaBetaBounds {
  Bound alpha_low;
  Bound alpha_high;
  Bound beta_low;
  Bound beta_high;
  Bound omega_low;
  Bound omega_high;
};

// Piecewise evaluation of the factor bounds.
//   alpha_low  = 2/(s+1)        (attained for s <= 2)
//   beta_low   = 4s/(s+1)^2     (attained for s <= 2)
//   omega_low  = (s+1)^2/(4s)   (valid for every body; attainment unknown)
//   omega_high = (s+1)/2        (attained by simplex caps for every s)
//   alpha_high = 1 up to gamma1 (attained), psi*n/(n+1) beyond gamma2,
//                open in between; identically 1 (attained) in odd dimensions.
//   beta_high  = 1 up to gamma1 (attained), mu*psi*n(n+2)/(n+1)^2 beyond
//                gamma3, open in between; identically 1 in odd dimensions.
inline AlphaBetaBounds alpha_beta_bounds(int n, double s) {
  if (n < 1) throw ParameterOutOfRange("alpha_beta_bounds: dimension must be positive");
  if (s < 1.0 || s > static_cast<double>(n))
    throw ParameterOutOfRange("alpha_beta_bounds: asymmetry must lie in [1, n]");

  AlphaBetaBounds b;
  const Region attained_low = s <= 2.0 ? Region::ProvedEqual : Region::BoundOnly;
  b.alpha_low = {2.0 / (s + 1.0), attained_low};
  b.beta_low = {4.0 * s / ((s + 1.0) * (s + 1.0)), attained_low};
  b.omega_low = {(s + 1.0) * (s + 1.0) / (4.0 * s), Region::BoundOnly};
  b.omega_high = {(s + 1.0) / 2.0, Region::ProvedEqual};

  if (n % 2 == 1) {
    // Odd dimensions: bodies with both factors equal to 1 exist at every
    // admissible asymmetry (the threshold sits at n itself).
    b.alpha_high = {1.0, Region::ProvedEqual};
    b.beta_high = {1.0, Region::ProvedEqual};
    return b;
  }

  const double g1 = gamma1(n);
  if (s <= g1) {
    b.alpha_high = {1.0, Region::ProvedEqual};
    b.beta_high = {1.0, Region::ProvedEqual};
    return b;
  }
  const double g2 = gamma2(n);
  if (s > g2) {
    b.alpha_high = {psi(n, s) * n / (n + 1.0), Region::BoundOnly};
  } else {
    b.alpha_high = {1.0, Region::Open};
  }
  const double g3 = gamma3(n);
  if (s > g3) {
    b.beta_high = {mu(n, s) * psi(n, s) * n * (n + 2.0) / ((n + 1.0) * (n + 1.0)),
                   Region::BoundOnly};
  } else {
    b.beta_high = {1.0, Region::Open};
  }
  return b;
}

// The six predicted reverse-containment factors at asymmetry s, keyed exactly
// like verify_reverse_factors' result: hull inside intersection at s, hull
// inside arithmetic and harmonic inside intersection at 2s/(s+1), and the
// three (s+1)/2 containments.
template <typename S>
std::map<std::string, S> reverse_factors(const S& s) {
  const S two_s_over = S(2) * s / (s + S(1));
  const S half_plus = (s + S(1)) / S(2);
  return {
      {"max_in_min", s},          {"max_in_arith", two_s_over},
      {"harm_in_min", two_s_over}, {"arith_in_min", half_plus},
      {"max_in_harm", half_plus}, {"arith_in_harm", half_plus},
  };
}

}  // namespace sym

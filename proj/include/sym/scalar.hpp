#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <type_traits>

#include "sym/errors.hpp"

namespace sym {

// Exact scalar backend: arbitrary-precision rationals (GMP-backed).
using Rational = boost::multiprecision::mpq_rational;

// Global absolute tolerance governing every sign/equality decision in the
// floating-point backend. The exact backend never consults it.
inline double& approx_tolerance() {
  static double tol = 1e-9;
  return tol;
}

// Tolerance used when comparing measured quantities against closed-form
// values in reports and acceptance checks (absorbs accumulated error).
inline constexpr double kReportTolerance = 1e-7;

template <typename S>
struct is_exact_scalar : std::false_type {};
template <>
struct is_exact_scalar<Rational> : std::true_type {};

template <typename S>
inline constexpr bool is_exact_v = is_exact_scalar<S>::value;

// Comparison slack: 0 for the exact backend, the global tolerance otherwise.
template <typename S>
S scalar_tolerance() {
  if constexpr (is_exact_v<S>) {
    return S(0);
  } else {
    return S(approx_tolerance());
  }
}

// Concrete overloads (not a template) so boost expression templates collapse
// to a plain Rational at the call boundary.
inline double scalar_abs(double x) { return std::fabs(x); }
inline Rational scalar_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.template convert_to<double>(); }

namespace detail {

// Parses a decimal literal ("-12.5e-3") into an exact rational.
inline Rational rational_from_decimal(const std::string& text) {
  std::size_t i = 0;
  std::string digits;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.'); ++i) {
    if (text[i] == '.') {
      if (seen_dot) throw Error("malformed number: " + text);
      seen_dot = true;
    } else {
      digits.push_back(text[i]);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    }
  }
  if (!seen_digit) throw Error("malformed number: " + text);
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_neg = text[i] == '-';
      ++i;
    }
    if (i == text.size()) throw Error("malformed exponent: " + text);
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw Error("malformed exponent: " + text);
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 4096) throw Error("exponent out of range: " + text);
    }
    if (exp_neg) exponent = -exponent;
  }
  if (i != text.size()) throw Error("malformed number: " + text);

  Rational value(digits.empty() ? "0" : digits);
  long net = exponent - frac_digits;
  const Rational ten(10);
  for (long k = 0; k < net; ++k) value *= ten;
  for (long k = 0; k > net; --k) value /= ten;
  return negative ? Rational(-value) : value;
}

}  // namespace detail

// Accepts "p/q" rational strings and plain decimal literals.
inline Rational parse_rational(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    try {
      Rational r(text);
      return r;
    } catch (const std::exception&) {
      throw Error("malformed rational: " + text);
    }
  }
  return detail::rational_from_decimal(text);
}

template <typename S>
S parse_scalar(const std::string& text) {
  if constexpr (is_exact_v<S>) {
    return parse_rational(text);
  } else {
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || (end && *end != '\0')) {
      // Fall back to exact parsing so "1/3" works on the approx backend too.
      return to_double(parse_rational(text));
    }
    return v;
  }
}

// Shortest round-trip formatting for doubles; "p/q" for rationals.
inline std::string format_scalar(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline std::string format_scalar(const Rational& x) {
  return x.str();
}

}  // namespace sym

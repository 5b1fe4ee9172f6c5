#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "levelmat/errors.hpp"

namespace levelmat {

/// Arbitrary-precision integer. Entries of integer matrices, determinants
/// and bound values all use this type; nothing in a decision path ever
/// goes through floating point.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, kept in lowest terms with positive denominator by the
/// backend, so equality is structural. Zero is 0/1.
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

/// Floor of the square root of a nonnegative integer.
inline Int isqrt(const Int& v) {
  if (v < 0) throw parameter_error("isqrt: negative argument");
  return sqrt(v);  // cpp_int sqrt already floors
}

inline Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

inline Int int_pow(const Int& base, unsigned long exp) {
  return boost::multiprecision::pow(base, exp);
}

// Componentwise order on vectors: x >= y iff every entry of x - y is >= 0,
// and x > y iff x >= y and x != y.
template <typename Vec>
bool vec_ge(const Vec& x, const Vec& y) {
  if (x.size() != y.size())
    throw dimension_error("vec_ge: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < y[i]) return false;
  return true;
}

template <typename Vec>
bool vec_gt(const Vec& x, const Vec& y) {
  return vec_ge(x, y) && x != y;
}

template <typename Vec>
bool vec_is_zero(const Vec& x) {
  for (const auto& v : x)
    if (v != 0) return false;
  return true;
}

/// Parses "p" or "p/q" with optional sign; q must be positive.
inline Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int p(text.substr(0, slash));
    Int q(text.substr(slash + 1));
    if (q <= 0) throw parse_error("rational with nonpositive denominator: " + text);
    return Rat(p, q);
  } catch (const std::runtime_error&) {
    throw parse_error("malformed rational: " + text);
  }
}

inline std::string format_rational(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

}  // namespace levelmat

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "levelmat/errors.hpp"
#include "levelmat/rational.hpp"

namespace levelmat {

/// floor( (num/den) * (n+1)^((n+1)/2) ) computed without floating point:
/// the value equals sqrt( (n+1)^(n+1) * num^2 / den^2 ), and for a
/// rational radicand N/D one has floor(sqrt(N/D)) = isqrt(N / D) with
/// integer division, so an arbitrary-precision integer square root floors
/// the expression exactly even when it is irrational.
inline Int floor_scaled_half_power(const Int& num, const Int& den, long long n) {
  if (n < 1) throw parameter_error("floor_scaled_half_power: n must be >= 1");
  if (num < 0 || den <= 0)
    throw parameter_error("floor_scaled_half_power: need num >= 0, den > 0");
  Int radicand = int_pow(Int(n + 1), static_cast<unsigned long>(n + 1)) * num * num;
  return isqrt(radicand / (den * den));
}

/// Row-count bound for irreducible k-matrices with n >= 3 columns:
/// (2k)^3 when n = 3, otherwise
/// floor( k^(n-1) * 2^(-n) * (n+1)^((n+1)/2) * ((k+1)^n - k^n + 1) ).
inline Int ub_main(long long n, long long k) {
  if (n < 3)
    throw parameter_error("ub_main: needs n >= 3 (use ub_lambert for n = 2)");
  if (k < 1) throw parameter_error("ub_main: needs k >= 1");
  if (n == 3) return int_pow(Int(2 * k), 3);
  const auto un = static_cast<unsigned long>(n);
  Int num = int_pow(Int(k), un - 1) *
            (int_pow(Int(k + 1), un) - int_pow(Int(k), un) + 1);
  Int den = int_pow(Int(2), un);
  return floor_scaled_half_power(num, den, n);
}

/// Exact value for two columns: ell(2,k) = 2k - 1 for k > 1.
inline Int ub_lambert(long long k) {
  if (k < 2) throw parameter_error("ub_lambert: needs k >= 2");
  return Int(2 * k - 1);
}

/// Inclusive form of the strict bound ell(H) < (2k)^(2^(n-1) - 1):
/// returns (2k)^(2^(n-1) - 1) - 1, usable directly as a row budget.
inline Int ub_ub2(long long n, long long k) {
  if (n < 2 || k < 1) throw parameter_error("ub_ub2: needs n >= 2, k >= 1");
  if (n > 64) throw resource_error("ub_ub2: exponent 2^(n-1)-1 too large to evaluate");
  unsigned long long exponent = (1ULL << (n - 1)) - 1;
  return int_pow(Int(2 * k), static_cast<unsigned long>(exponent)) - 1;
}

/// floor( (k/2)^(n-1) * (n+1)^((n+1)/2) ): row-count bound for stacks
/// L(A, r_y, y) built from an invertible n x n k-matrix A.
inline Int ub_lg(long long n, long long k) {
  if (n < 2 || k < 1) throw parameter_error("ub_lg: needs n >= 2, k >= 1");
  const auto un = static_cast<unsigned long>(n);
  return floor_scaled_half_power(int_pow(Int(k), un - 1), int_pow(Int(2), un - 1), n);
}

/// floor( (k/2)^n * (n+1)^((n+1)/2) ): determinant bound for n x n
/// matrices with |entries| <= k.
inline Int hadamard_bound(long long n, long long k) {
  if (n < 1 || k < 1) throw parameter_error("hadamard_bound: needs n >= 1, k >= 1");
  const auto un = static_cast<unsigned long>(n);
  return floor_scaled_half_power(int_pow(Int(k), un), int_pow(Int(2), un), n);
}

/// e^((1-eps) * sqrt(n ln n)). Display-only: this asymptotic lower-bound
/// envelope never gates any decision in the library.
inline double lb_exponent(long long n, double eps) {
  if (n < 2) throw parameter_error("lb_exponent: needs n >= 2");
  if (eps < 0.0 || eps >= 1.0) throw parameter_error("lb_exponent: needs 0 <= eps < 1");
  double nn = static_cast<double>(n);
  return std::exp((1.0 - eps) * std::sqrt(nn * std::log(nn)));
}

/// ((k+1)^n - k^n - 1) / 2, the distinct-row count of the A(H)
/// construction. The numerator is always even.
inline Int ah_row_count(long long n, long long k) {
  if (n < 2 || k < 1) throw parameter_error("ah_row_count: needs n >= 2, k >= 1");
  const auto un = static_cast<unsigned long>(n);
  return (int_pow(Int(k + 1), un) - int_pow(Int(k), un) - 1) / 2;
}

/// Default search budget for irreducible-leveler row counts with n
/// columns and entries bounded by k. For n = 2 the k = 1 case needs the
/// inclusive value 2 (the 2x2 identity is irreducible, so the strict
/// two-column bound only holds for k > 1).
inline Int default_row_budget(long long n, long long k) {
  if (n < 1) throw parameter_error("default_row_budget: needs n >= 1");
  if (n == 1) return Int(1);
  if (k < 1) return Int(1);  // all-zero universe: only single zero rows
  if (n == 2) return Int(std::max(2 * k - 1, 2LL));
  Int main = ub_main(n, k), ub2 = ub_ub2(n, k);
  return main < ub2 ? main : ub2;
}

/// Evaluation of every bound formula at one (n, k), for reporting.
struct BoundReport {
  long long n = 0, k = 0;
  std::optional<Int> ub_main;     // n >= 3 only
  std::optional<Int> ub_lambert;  // n == 2, k >= 2 only
  Int ub_ub2;
  Int ub_lg;
  Int hadamard;
  Int ah_rows;
  Int row_budget;
  double lb_value = 0.0;  // display only
  double lb_eps = 0.0;
  std::vector<std::string> formulas_used;
};

inline BoundReport bound_report(long long n, long long k, double eps = 0.0) {
  if (n < 2 || k < 1) throw parameter_error("bound_report: needs n >= 2, k >= 1");
  BoundReport r;
  r.n = n;
  r.k = k;
  if (n >= 3) {
    r.ub_main = ub_main(n, k);
    r.formulas_used.push_back(
        n == 3 ? "ub_main = (2k)^3"
               : "ub_main = floor(k^(n-1) 2^(-n) (n+1)^((n+1)/2) ((k+1)^n - k^n + 1))");
  }
  if (n == 2 && k >= 2) {
    r.ub_lambert = ub_lambert(k);
    r.formulas_used.push_back("ub_lambert = 2k - 1 (exact value of ell(2,k))");
  }
  r.ub_ub2 = ub_ub2(n, k);
  r.formulas_used.push_back("ub_ub2 = (2k)^(r_n) - 1 with r_n = 2^(n-1) - 1");
  r.ub_lg = ub_lg(n, k);
  r.formulas_used.push_back("ub_lg = floor((k/2)^(n-1) (n+1)^((n+1)/2))");
  r.hadamard = hadamard_bound(n, k);
  r.formulas_used.push_back("hadamard = floor((k/2)^n (n+1)^((n+1)/2))");
  r.ah_rows = ah_row_count(n, k);
  r.formulas_used.push_back("ah_rows = ((k+1)^n - k^n - 1)/2");
  r.row_budget = default_row_budget(n, k);
  r.lb_eps = eps;
  r.lb_value = lb_exponent(n, eps);
  r.formulas_used.push_back("lb (display only) = e^((1-eps) sqrt(n ln n))");
  return r;
}

}  // namespace levelmat

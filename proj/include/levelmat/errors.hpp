#pragma once

#include <stdexcept>
#include <string>

namespace levelmat {

/// Base class of every error thrown by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched or unusable dimensions (non-square determinant, ...).
struct dimension_error : error {
  using error::error;
};

/// Exactly singular matrix where an invertible one is required.
struct singular_error : error {
  using error::error;
};

/// Matrix does not have full column rank.
struct rank_error : error {
  using error::error;
};

/// A point fails a feasibility requirement (not in F(A), not level, ...).
struct infeasible_error : error {
  using error::error;
};

/// Caller broke a documented precondition.
struct contract_error : error {
  using error::error;
};

/// Malformed text input.
struct parse_error : error {
  using error::error;
};

/// Bad scalar parameter (composite modulus, out-of-range eps, ...).
struct parameter_error : error {
  using error::error;
};

/// A search exceeded its configured work limit. Carries the best lower
/// bound established before the limit was hit.
struct resource_error : error {
  resource_error(const std::string& what, long long partial = 0)
      : error(what), partial_lower_bound(partial) {}
  long long partial_lower_bound;
};

}  // namespace levelmat

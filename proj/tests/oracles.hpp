#pragma once

// Test-only oracles, deliberately independent of the library's production
// code paths: naive cofactor determinants, odometer-style leveler
// enumeration, and subset-based reducibility checks. Everything here runs
// in exponential time and is only pointed at small inputs.

#include <optional>
#include <random>
#include <vector>

#include "levelmat/kmatrix.hpp"
#include "levelmat/matrix.hpp"

namespace oracles {

inline levelmat::Int det_cofactor(const levelmat::IntMat& m) {
  using levelmat::Int;
  const std::size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  Int total(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    levelmat::IntMat minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Int term = m.at(0, j) * det_cofactor(minor);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

/// All levelers x of A with sum(x) <= budget, by plain box enumeration.
inline std::vector<levelmat::Leveler> all_levelers_brute(const levelmat::KMatrix& a,
                                                         long long budget) {
  using namespace levelmat;
  std::vector<Leveler> found;
  EntryVec x(a.rows(), 0);
  long long total = 0;
  while (true) {
    if (total > 0) {
      if (auto alpha = leveler_check(a, x)) found.push_back({x, *alpha});
    }
    // odometer step under the sum cap
    std::size_t i = 0;
    for (; i < x.size(); ++i) {
      if (total < budget) {
        ++x[i];
        ++total;
        break;
      }
      total -= x[i];
      x[i] = 0;
    }
    if (i == x.size()) break;
  }
  return found;
}

/// Minimal nonzero levelers (no leveler y with 0 < y < x), the brute-force
/// mirror of a Hilbert basis restricted to sum(x) <= budget.
inline std::vector<levelmat::Leveler> minimal_levelers_brute(const levelmat::KMatrix& a,
                                                             long long budget) {
  using namespace levelmat;
  auto all = all_levelers_brute(a, budget);
  std::vector<Leveler> minimal;
  for (const auto& cand : all) {
    bool dominated = false;
    for (const auto& other : all) {
      if (vec_gt(cand.x, other.x)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(cand);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

/// Reducibility by enumerating every proper nonempty row subset. Only for
/// matrices with at most ~20 rows.
inline std::optional<std::vector<std::size_t>> reducible_subset_brute(
    const levelmat::KMatrix& m) {
  using namespace levelmat;
  const std::size_t rows = m.rows();
  for (std::uint64_t mask = 1; mask + 1 < (1ULL << rows); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < rows; ++i)
      if (mask & (1ULL << i)) idx.push_back(i);
    if (is_level(m.take_rows(idx))) return idx;
  }
  return std::nullopt;
}

inline levelmat::KMatrix random_kmatrix(std::mt19937_64& rng, std::size_t m,
                                        std::size_t n, long long k) {
  std::uniform_int_distribution<long long> entry(0, k);
  std::vector<levelmat::EntryVec> rows(m, levelmat::EntryVec(n));
  for (auto& r : rows)
    for (auto& e : r) e = entry(rng);
  return levelmat::KMatrix::from_rows(rows, k);
}

}  // namespace oracles

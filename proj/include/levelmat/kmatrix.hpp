#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "levelmat/errors.hpp"
#include "levelmat/matrix.hpp"
#include "levelmat/rational.hpp"

namespace levelmat {

/// Entry type for k-matrices and levelers. Entries are bounded by the
/// declared k and row counts stay at desk scale, so a fixed-width integer
/// is safe here; everything with unbounded growth (determinants, solves,
/// bound formulas) runs on arbitrary precision in matrix.hpp / bounds.hpp.
using Entry = long long;
using EntryVec = std::vector<Entry>;

/// Matrix with entries in {0,...,k}. The declared bound k may exceed the
/// largest entry actually present; operations that need the attained
/// maximum (complement) compute it fresh.
class KMatrix {
 public:
  KMatrix(std::size_t m, std::size_t n, Entry k, EntryVec entries)
      : m_(m), n_(n), k_(k), entries_(std::move(entries)) {
    if (m_ == 0 || n_ == 0)
      throw dimension_error("KMatrix: dimensions must be positive");
    if (entries_.size() != m_ * n_)
      throw dimension_error("KMatrix: entry count does not match dimensions");
    if (k_ < 0) throw contract_error("KMatrix: negative bound k");
    for (Entry e : entries_) {
      if (e < 0) throw contract_error("KMatrix: negative entry");
      if (e > k_) throw contract_error("KMatrix: entry exceeds declared bound k");
    }
  }

  static KMatrix from_rows(const std::vector<EntryVec>& rows, Entry k = -1) {
    if (rows.empty()) throw dimension_error("KMatrix: no rows");
    const std::size_t n = rows.front().size();
    EntryVec flat;
    flat.reserve(rows.size() * n);
    Entry max_e = 0;
    for (const auto& r : rows) {
      if (r.size() != n) throw dimension_error("KMatrix: ragged rows");
      for (Entry e : r) {
        flat.push_back(e);
        max_e = std::max(max_e, e);
      }
    }
    return KMatrix(rows.size(), n, k < 0 ? max_e : k, std::move(flat));
  }

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  Entry bound() const { return k_; }

  Entry at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  EntryVec row(std::size_t i) const {
    return EntryVec(entries_.begin() + i * n_, entries_.begin() + (i + 1) * n_);
  }

  std::vector<EntryVec> row_list() const {
    std::vector<EntryVec> out;
    out.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) out.push_back(row(i));
    return out;
  }

  Entry max_entry() const {
    Entry t = 0;
    for (Entry e : entries_) t = std::max(t, e);
    return t;
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < n_; ++j)
      if (at(i, j) != 0) return false;
    return true;
  }

  KMatrix take_rows(const std::vector<std::size_t>& idx) const {
    std::vector<EntryVec> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(row(i));
    return from_rows(out, k_);
  }

  IntMat to_int_mat() const {
    IntMat m(m_, n_);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = Int(at(i, j));
    return m;
  }

  bool operator==(const KMatrix& o) const {
    return m_ == o.m_ && n_ == o.n_ && k_ == o.k_ && entries_ == o.entries_;
  }
  bool operator<(const KMatrix& o) const {
    return std::tie(m_, n_, k_, entries_) < std::tie(o.m_, o.n_, o.k_, o.entries_);
  }

  const EntryVec& flat() const { return entries_; }

 private:
  std::size_t m_, n_;
  Entry k_;
  EntryVec entries_;
};

/// Nonnegative integer vector x with A^T x = alpha * 1 for its owning
/// matrix A. alpha == 0 exactly when x selects only zero rows (or x = 0).
struct Leveler {
  EntryVec x;
  Entry alpha = 0;

  Entry row_count() const {
    return std::accumulate(x.begin(), x.end(), Entry(0));
  }
  bool operator==(const Leveler& o) const { return x == o.x && alpha == o.alpha; }
  bool operator<(const Leveler& o) const {
    return std::tie(x, alpha) < std::tie(o.x, o.alpha);
  }
};

inline EntryVec column_sums(const KMatrix& m) {
  EntryVec sums(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) sums[j] += m.at(i, j);
  return sums;
}

/// Common column sum when the matrix is level, nothing otherwise.
inline std::optional<Entry> is_level(const KMatrix& m) {
  EntryVec sums = column_sums(m);
  for (Entry s : sums)
    if (s != sums.front()) return std::nullopt;
  return sums.front();
}

/// Entrywise b -> t - b where t is the attained maximum entry. The result
/// is declared a t-matrix.
inline KMatrix complement(const KMatrix& m) {
  const Entry t = m.max_entry();
  EntryVec flipped;
  flipped.reserve(m.rows() * m.cols());
  for (Entry e : m.flat()) flipped.push_back(t - e);
  return KMatrix(m.rows(), m.cols(), t, std::move(flipped));
}

/// alpha such that A^T x = alpha * 1, if A^T x is constant.
inline std::optional<Entry> leveler_check(const KMatrix& a, const EntryVec& x) {
  if (x.size() != a.rows())
    throw contract_error("leveler_check: weight length != row count");
  for (Entry v : x)
    if (v < 0) throw contract_error("leveler_check: negative weight");
  EntryVec sums(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) sums[j] += x[i] * a.at(i, j);
  }
  for (Entry s : sums)
    if (s != sums.front()) return std::nullopt;
  return sums.front();
}

/// L(A, r, x): the matrix stacking r*x_i copies of row A_i, rows emitted
/// in ascending i with copies adjacent. The paper defines stacks only up
/// to a row permutation; equality comparisons between stacks should go
/// through canonical_form (or sorted row multisets).
inline KMatrix stack(const KMatrix& a, const Int& r, const RatVec& x) {
  if (x.size() != a.rows())
    throw contract_error("stack: weight length != row count");
  if (r <= 0) throw contract_error("stack: multiplier must be positive");
  std::vector<EntryVec> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rat count = Rat(r) * x[i];
    if (rat_den(count) != 1)
      throw contract_error("stack: r*x has a non-integral entry");
    Int c = rat_num(count);
    if (c < 0) throw contract_error("stack: r*x has a negative entry");
    if (c > 10'000'000)
      throw resource_error("stack: refusing to materialize more than 1e7 copies of a row");
    for (Int copy = 0; copy < c; ++copy) rows.push_back(a.row(i));
  }
  if (rows.empty()) throw contract_error("stack: empty stack (r*x = 0)");
  return KMatrix::from_rows(rows, a.bound());
}

/// Convenience overload for integral multiplicities (r = 1, x integral).
inline KMatrix stack(const KMatrix& a, const EntryVec& x) {
  RatVec rx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) rx[i] = Rat(x[i]);
  return stack(a, Int(1), rx);
}

/// Canonical representative of a KMatrix modulo row and column
/// permutations, plus the permutations that realize it:
///   canonical.at(i, j) == original.at(row_perm[i], col_perm[j]).
struct CanonicalForm {
  KMatrix matrix;
  std::vector<std::size_t> row_perm;
  std::vector<std::size_t> col_perm;

  bool operator==(const CanonicalForm& o) const { return matrix == o.matrix; }
  bool operator<(const CanonicalForm& o) const { return matrix < o.matrix; }
};

namespace detail {

struct CanonicalCache {
  std::mutex mu;
  std::map<std::pair<std::pair<std::size_t, Entry>, EntryVec>, CanonicalForm> map;
};

inline CanonicalCache& canonical_cache() {
  static CanonicalCache cache;
  return cache;
}

}  // namespace detail

/// Lexicographically least matrix obtainable by a column permutation
/// followed by sorting rows ascending. Brute force over all n! column
/// orders; n stays small in every workload this library targets, and the
/// result is memoized on the matrix content.
inline CanonicalForm canonical_form(const KMatrix& m) {
  auto key = std::make_pair(std::make_pair(m.cols(), m.bound()), m.flat());
  {
    auto& cache = detail::canonical_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.map.find(key);
    if (it != cache.map.end()) return it->second;
  }

  const std::size_t n = m.cols(), rows = m.rows();
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), 0);

  std::optional<EntryVec> best;
  std::vector<std::size_t> best_cols, best_rows;
  std::vector<std::pair<EntryVec, std::size_t>> permuted(rows);
  do {
    for (std::size_t i = 0; i < rows; ++i) {
      EntryVec r(n);
      for (std::size_t j = 0; j < n; ++j) r[j] = m.at(i, cols[j]);
      permuted[i] = {std::move(r), i};
    }
    std::stable_sort(permuted.begin(), permuted.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    EntryVec flat;
    flat.reserve(rows * n);
    for (const auto& [r, _] : permuted)
      flat.insert(flat.end(), r.begin(), r.end());
    if (!best || flat < *best) {
      best = std::move(flat);
      best_cols = cols;
      best_rows.clear();
      for (const auto& [_, i] : permuted) best_rows.push_back(i);
    }
  } while (std::next_permutation(cols.begin(), cols.end()));

  CanonicalForm result{KMatrix(rows, n, m.bound(), std::move(*best)),
                       std::move(best_rows), std::move(best_cols)};
  {
    auto& cache = detail::canonical_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.map.emplace(std::move(key), result);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Matrix text format (shared with the CLI): optional `#` comment lines, an
// optional `k=<int>` header before the first row, then one row per line of
// whitespace-separated nonnegative integers. The bound defaults to the
// largest entry when no header is given.

inline KMatrix parse_matrix(std::istream& in) {
  std::string line;
  std::vector<EntryVec> rows;
  Entry declared_k = -1;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::string body = line.substr(start);
    if (body.rfind("k=", 0) == 0) {
      if (!rows.empty())
        throw parse_error("line " + std::to_string(lineno) +
                          ": k= header must precede all rows");
      try {
        std::size_t pos = 0;
        declared_k = std::stoll(body.substr(2), &pos);
        if (pos != body.size() - 2 || declared_k < 0) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw parse_error("line " + std::to_string(lineno) + ": malformed k= header");
      }
      continue;
    }
    std::istringstream ls(body);
    EntryVec row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t pos = 0;
        Entry v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        if (v < 0)
          throw parse_error("line " + std::to_string(lineno) + ": negative entry");
        row.push_back(v);
      } catch (const parse_error&) {
        throw;
      } catch (const std::exception&) {
        throw parse_error("line " + std::to_string(lineno) + ": malformed entry '" +
                          tok + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw parse_error("line " + std::to_string(lineno) + ": ragged row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw parse_error("no matrix rows found");
  Entry max_e = 0;
  for (const auto& r : rows)
    for (Entry e : r) max_e = std::max(max_e, e);
  if (declared_k >= 0 && declared_k < max_e)
    throw parse_error("declared k smaller than an entry");
  return KMatrix::from_rows(rows, declared_k < 0 ? max_e : declared_k);
}

inline KMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

inline std::string format_matrix(const KMatrix& m) {
  std::ostringstream out;
  if (m.bound() != m.max_entry()) out << "k=" << m.bound() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace levelmat

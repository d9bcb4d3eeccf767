#pragma once

#include "dihedral/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dihedral {

using IntVector = std::vector<std::int64_t>;

/// A row or column sum vector. Entries are nonnegative exact rationals.
class MarginVector {
 public:
  MarginVector() = default;
  explicit MarginVector(std::vector<Scalar> entries);
  MarginVector(std::initializer_list<std::int64_t> entries);
  static MarginVector from_integers(const IntVector& entries);
  /// Comma-separated scalars, e.g. "3,1/2,0". The empty string is the empty vector.
  static MarginVector parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }
  Scalar total() const;
  bool is_integral() const;
  /// Throws Error(NotIntegral) if any entry is fractional.
  IntVector integers() const;
  std::string to_string() const;

  friend bool operator==(const MarginVector&, const MarginVector&) = default;

 private:
  std::vector<Scalar> entries_;
};

/// (R, S) with the common total N = sum(R) = sum(S).
class MarginPair {
 public:
  /// Throws Error(SumMismatch) when the totals differ.
  MarginPair(MarginVector rows, MarginVector cols);

  const MarginVector& rows() const noexcept { return rows_; }
  const MarginVector& cols() const noexcept { return cols_; }
  std::size_t m() const noexcept { return rows_.size(); }
  std::size_t n() const noexcept { return cols_.size(); }
  const Scalar& total() const noexcept { return total_; }
  bool is_integral() const { return rows_.is_integral() && cols_.is_integral(); }
  /// Every r_i <= n and s_j <= m (integral margins assumed).
  bool within_zero_one_bounds() const;
  MarginPair transposed() const { return MarginPair(cols_, rows_); }

 private:
  MarginVector rows_;
  MarginVector cols_;
  Scalar total_;
};

// Half-dimension helpers: the number of strictly-upper positions and the
// 1-based index of the middle (for odd n) position.
constexpr std::size_t lower_half(std::size_t n) { return n / 2; }
constexpr std::size_t upper_half(std::size_t n) { return (n + 1) / 2; }

/// A permutation of positions that commutes with reversal and keeps the upper
/// half in the upper half. `source(k)` is the position of v that lands at k.
class MirrorPermutation {
 public:
  MirrorPermutation() = default;
  static MirrorPermutation identity(std::size_t n);
  /// Builds the full permutation from its action on the upper half.
  static MirrorPermutation from_upper_half(std::size_t n, const std::vector<std::size_t>& upper);

  std::size_t size() const noexcept { return source_.size(); }
  std::size_t source(std::size_t k) const { return source_[k]; }
  const std::vector<std::size_t>& sources() const noexcept { return source_; }
  bool is_identity() const;
  MirrorPermutation inverse() const;

  /// (sigma . v)_k = v_{source(k)}
  template <typename T>
  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[source_[k]];
    return out;
  }

  /// Inverse action: out_{source(k)} = v_k.
  template <typename T>
  std::vector<T> unapply(const std::vector<T>& v) const {
    std::vector<T> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[source_[k]] = v[k];
    return out;
  }

  friend bool operator==(const MirrorPermutation&, const MirrorPermutation&) = default;

 private:
  std::vector<std::size_t> source_;
};

// ---- generic vector utilities (integers or Scalars) ----

/// Weakly decreasing rearrangement, stable in the original index.
template <typename T>
std::vector<T> decreasing_rearrangement(std::vector<T> v) {
  std::stable_sort(v.begin(), v.end(), [](const T& a, const T& b) { return a > b; });
  return v;
}

template <typename T>
std::vector<T> reverse(std::vector<T> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

template <typename T>
bool is_palindromic(const std::vector<T>& v) {
  return std::equal(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.rbegin());
}

/// a majorizes b: equal totals and dominating prefix sums of the sorted vectors,
/// the shorter one padded with zeros.
template <typename T>
bool majorizes(const std::vector<T>& a, const std::vector<T>& b) {
  const auto sa = decreasing_rearrangement(a);
  const auto sb = decreasing_rearrangement(b);
  T pa{0}, pb{0};
  const std::size_t len = std::max(sa.size(), sb.size());
  for (std::size_t k = 0; k < len; ++k) {
    if (k < sa.size()) pa += sa[k];
    if (k < sb.size()) pb += sb[k];
    if (pa < pb) return false;
  }
  return pa == pb;
}

MarginVector decreasing_rearrangement(const MarginVector& v);
MarginVector reverse(const MarginVector& v);
bool is_palindromic(const MarginVector& v);
bool majorizes(const MarginVector& a, const MarginVector& b);

/// Conjugate partition: entry k (1-based) counts entries >= k. Entries must be
/// nonnegative integers; all-zero and empty inputs give the empty vector.
IntVector conjugate(const IntVector& v);
MarginVector conjugate(const MarginVector& v);

std::size_t odd_count(const IntVector& v);
std::size_t odd_count(const MarginVector& v);

IntVector::value_type sum(const IntVector& v);

/// Returns (sigma . v, sigma) with the upper half of sigma . v weakly
/// decreasing. Throws Error(Argument) when v is not palindromic.
std::pair<IntVector, MirrorPermutation> normalize_initially_nonincreasing(const IntVector& v);
std::pair<MarginVector, MirrorPermutation> normalize_initially_nonincreasing(const MarginVector& v);

}  // namespace dihedral

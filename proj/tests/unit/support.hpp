#pragma once

// Test helpers: seeded random objects and tiny reference computations that
// deliberately avoid the library code they are compared against.

#include "dihedral/margins.hpp"
#include "dihedral/matrix.hpp"
#include "dihedral/symmetry.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace testing_support {

using namespace dihedral;

inline std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, std::int64_t hi) {
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = pick(rng, 0, hi);
  return a;
}

inline DenseMatrix random_rational_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  DenseMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(pick(rng, 0, 12), pick(rng, 1, 5));
  return a;
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t len, std::int64_t hi) {
  IntVector v(len);
  for (auto& x : v) x = pick(rng, 0, hi);
  return v;
}

// R* by counting, entry by entry.
inline IntVector conjugate_by_count(const IntVector& v) {
  IntVector out;
  for (std::int64_t k = 1;; ++k) {
    const auto c = std::count_if(v.begin(), v.end(), [k](std::int64_t x) { return x >= k; });
    if (c == 0) return out;
    out.push_back(c);
  }
}

// Majorization from the definition with explicit sorting and padding.
inline bool majorizes_by_definition(IntVector a, IntVector b) {
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  const std::size_t len = std::max(a.size(), b.size());
  a.resize(len, 0);
  b.resize(len, 0);
  std::int64_t pa = 0, pb = 0;
  for (std::size_t k = 0; k < len; ++k) {
    pa += a[k];
    pb += b[k];
    if (pa < pb) return false;
  }
  return pa == pb;
}

inline MarginPair margins_of(const IntMatrix& a) {
  return MarginPair(MarginVector::from_integers(a.row_sums()), MarginVector::from_integers(a.col_sums()));
}

inline MarginPair margins_of(const DenseMatrix& a) {
  return MarginPair(MarginVector(a.row_sums()), MarginVector(a.col_sums()));
}

inline MarginPair pair(const IntVector& r, const IntVector& s) {
  return MarginPair(MarginVector::from_integers(r), MarginVector::from_integers(s));
}

// An h-invariant matrix with entries in [0, hi], one draw per orbit.
inline IntMatrix random_invariant(std::mt19937_64& rng, std::size_t m, std::size_t n, SubgroupId h, std::int64_t hi) {
  IntMatrix a(m, n);
  for (const auto& orbit : cell_orbits(h, m, n)) {
    const auto v = pick(rng, 0, hi);
    for (const auto& [i, j] : orbit) a(i, j) = v;
  }
  return a;
}

}  // namespace testing_support

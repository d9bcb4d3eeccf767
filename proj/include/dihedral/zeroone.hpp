#pragma once

#include "dihedral/margins.hpp"
#include "dihedral/matrix.hpp"
#include "dihedral/report.hpp"
#include "dihedral/symmetry.hpp"

namespace dihedral::zeroone {

/// S is majorized by the conjugate of R. Bounds are not checked here: an
/// entry too large for the other dimension simply fails the test.
bool gale_ryser_feasible(const IntVector& rows, const IntVector& cols);
/// Throws Error(Bounds) unless r_i <= n and s_j <= m.
bool gale_ryser_feasible(const MarginPair& p);

/// Columns in weakly decreasing s_j (ties by index); each column takes the
/// rows with the largest remaining sums, ties to the lowest row index.
/// Throws Error(Infeasible) if the condition fails.
IntMatrix gale_ryser_construct(const IntVector& rows, const IntVector& cols);
DenseMatrix gale_ryser_construct(const MarginPair& p);

/// Bookkeeping for peeling the middle row and/or column off a
/// centrosymmetric problem.
struct ReductionTrace {
  std::size_t m = 0, n = 0;
  MirrorPermutation row_order;  // normalization applied to R
  MirrorPermutation col_order;  // normalization applied to S
  std::vector<std::size_t> middle_row_ones;  // normalized column indices
  std::vector<std::size_t> middle_col_ones;  // normalized row indices
  std::int64_t center = 0;
};

struct ReducedPair {
  IntVector rows;
  IntVector cols;
  ReductionTrace trace;
};

/// Normalizes both margins to initially nonincreasing form, then deletes the
/// middle row (and/or column) and decrements the matching outer entries of
/// the other margin. Both margins must be palindromic (Error(Argument)).
/// A decrement below zero means the class is empty: Error(Infeasible).
ReducedPair centro_reduce(const IntVector& rows, const IntVector& cols);
/// Maps a witness for the reduced margins back to one for the originals.
IntMatrix unwind(const ReducedPair& reduced, const IntMatrix& witness);

/// Symmetric (0,1)-matrix with row sums r; needs r majorized by its
/// conjugate (Error(Infeasible) otherwise). Lexicographically first in
/// row-major order with 0 before 1.
IntMatrix symmetric_01_construct(const IntVector& r);

/// Symmetric (0,1,2)-matrix existence via 2kl >= sum_{i<=k} r_i - sum_{i>l} r_i
/// over 1 <= k <= l <= n on the sorted vector.
bool symmetric_012_feasible(const IntVector& r);
/// Witness, row-major with larger values tried first.
IntMatrix symmetric_012_construct(const IntVector& r);

/// Removes diagonal ones pairwise (lowest indices first) by 2x2
/// substitutions that keep row sums. Error(Argument) for an odd count.
IntMatrix clean_diagonal(IntMatrix m);
/// B with B + B^t = M for symmetric M without diagonal ones.
IntMatrix split_symmetric(const IntMatrix& m);

/// Throws Error(NotIntegral), Error(Bounds) or Error(Shape) on invalid input.
FeasibilityReport feasible01(const MarginPair& p, SubgroupId h);
/// Throws Error(Infeasible) when the class is empty.
DenseMatrix construct01(const MarginPair& p, SubgroupId h);

}  // namespace dihedral::zeroone

#pragma once

#include "dihedral/margins.hpp"
#include "dihedral/matrix.hpp"
#include "dihedral/report.hpp"
#include "dihedral/symmetry.hpp"

namespace dihedral::transport {

/// t_ij = r_i s_j / N; the zero matrix when N = 0.
DenseMatrix proportional_fill(const MarginPair& p);

/// Transportation algorithm on the lowest-index live row and column. When
/// r_i == s_j the row is retired. Totals must agree.
IntMatrix greedy_integral(const IntVector& rows, const IntVector& cols);
DenseMatrix greedy_integral(const MarginPair& p);

/// Parity markers. rows_marker has a one at (i, middle column) for each odd
/// r_i (n odd only); cols_marker likewise for odd s_j in the middle row (m odd
/// only); plus is their entrywise maximum when both m and n are odd.
struct MarkerTriple {
  IntMatrix rows_marker;
  IntMatrix cols_marker;
  IntMatrix plus;
};
MarkerTriple marker_matrices(const IntVector& rows, const IntVector& cols);
MarkerTriple marker_matrices(const MarginPair& p);

/// Decides nonemptiness of the real or integral class invariant under h and
/// attaches a verified witness when nonempty. Throws Error(Shape) for a
/// square-only subgroup on non-square margins, Error(NotIntegral) for
/// fractional margins in the integral class, Error(Argument) for ZeroOne.
FeasibilityReport feasible(const MarginPair& p, SubgroupId h, MatrixClass c);

/// The witness alone. Throws Error(Infeasible) when the class is empty.
DenseMatrix construct(const MarginPair& p, SubgroupId h, MatrixClass c);

}  // namespace dihedral::transport

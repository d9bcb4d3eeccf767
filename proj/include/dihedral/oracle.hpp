#pragma once

#include "dihedral/margins.hpp"
#include "dihedral/matrix.hpp"
#include "dihedral/report.hpp"
#include "dihedral/symmetry.hpp"
#include "dihedral/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dihedral::oracle {

/// First invariant matrix in the class, found by exhaustive search over one
/// value per cell orbit (orbits by minimal cell, values ascending). For the
/// integral class entries are capped at entry_bound; a negative bound means
/// min(max R, max S), which never cuts off a witness.
/// Throws Error(Argument) for the real class, Error(NotIntegral) for
/// fractional margins and Error(Shape) for square-only subgroups.
std::optional<DenseMatrix> enumerate(const MarginPair& p, SubgroupId h, MatrixClass c, std::int64_t entry_bound = -1);
std::optional<IntMatrix> enumerate(const IntVector& rows, const IntVector& cols, SubgroupId h, std::int64_t entry_bound);

/// Same question answered by searching every cell independently and testing
/// invariance at the leaves. Only meant for tiny grids.
bool exists_unrestricted(const IntVector& rows, const IntVector& cols, SubgroupId h, std::int64_t entry_bound);

/// Exhaustive search for a symmetric matrix with entries in {0,1,2} and row
/// sums r.
bool symmetric_012_exists(const IntVector& r);
/// 2|I||J| >= sum_{i in I} r_i - sum_{j not in J} r_j over all subset pairs.
bool symmetric_012_all_subsets(const IntVector& r);

struct SweepConfig {
  std::size_t max_m = 3;
  std::size_t max_n = 3;
  std::int64_t max_total = 6;
  std::vector<MatrixClass> classes{MatrixClass::Integral, MatrixClass::ZeroOne};
  std::vector<SubgroupId> subgroups{kAllSubgroups.begin(), kAllSubgroups.end()};
  std::int64_t entry_bound = -1;  // integral class; negative means N
  std::size_t jobs = 1;
  // Negates the theorem decision on 1x1 instances, to check that the sweep
  // notices.
  bool inject_fault = false;
};

struct Discrepancy {
  std::string instance;  // "R=(..) S=(..)"
  SubgroupId subgroup = SubgroupId::Trivial;
  MatrixClass matrix_class = MatrixClass::Integral;
  std::string theorem_decision;
  std::string oracle_decision;

  std::string to_string() const;
};

struct SweepResult {
  std::size_t checked = 0;
  std::vector<Discrepancy> discrepancies;  // sorted by instance, subgroup, class
};

SweepResult sweep(const SweepConfig& cfg);

/// All vectors of the given length with entries in [0, cap] summing to total,
/// in lexicographic order.
std::vector<IntVector> compositions(std::size_t length, std::int64_t total, std::int64_t cap);

}  // namespace dihedral::oracle

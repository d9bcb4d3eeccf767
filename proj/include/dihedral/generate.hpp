#pragma once

#include "dihedral/margins.hpp"
#include "dihedral/matrix.hpp"
#include "dihedral/report.hpp"
#include "dihedral/symmetry.hpp"

#include <cstdint>
#include <random>

namespace dihedral::generate {

struct Options {
  std::uint64_t seed = 1;
  std::size_t max_m = 4;
  std::size_t max_n = 4;
  std::int64_t max_entry = 3;  // per-cell cap for the integral and real classes
  SubgroupId subgroup = SubgroupId::Trivial;
  MatrixClass matrix_class = MatrixClass::Integral;
  double feasible_bias = 0.5;  // chance of taking margins from an invariant matrix
};

/// One value per cell orbit, so the result is h-invariant. Real entries are
/// p/q with q in 1..4 and p/q <= max_entry.
DenseMatrix random_invariant_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, SubgroupId h, MatrixClass c,
                                    std::int64_t max_entry);

/// Margins with equal sums that also meet the structural requirements of h:
/// palindromic where a reflection or half turn forces it, S = R or S = R^r
/// where a diagonal forces it. Deterministic per seed.
MarginPair instance(const Options& opt);

}  // namespace dihedral::generate

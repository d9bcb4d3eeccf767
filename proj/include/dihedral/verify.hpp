#pragma once

#include "dihedral/margins.hpp"
#include "dihedral/matrix.hpp"
#include "dihedral/report.hpp"
#include "dihedral/symmetry.hpp"

#include <string>
#include <vector>

namespace dihedral::oracle {

struct Mismatch {
  std::string kind;  // "dimension", "row", "col", "invariance", "shape", "domain"
  std::size_t index = 0;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  bool margins_ok = true;
  bool invariant_ok = true;
  bool domain_ok = true;
  std::vector<Mismatch> mismatches;

  bool passed() const { return margins_ok && invariant_ok && domain_ok && mismatches.empty(); }
};

/// Recomputes margins, invariance and the entry domain of a from scratch.
/// Never throws for well-formed arguments; every failure is reported.
VerifyReport verify(const DenseMatrix& a, const MarginPair& p, SubgroupId h, MatrixClass c);

}  // namespace dihedral::oracle

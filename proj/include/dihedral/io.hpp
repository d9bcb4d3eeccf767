#pragma once

#include "dihedral/margins.hpp"
#include "dihedral/matrix.hpp"
#include "dihedral/report.hpp"
#include "dihedral/symmetry.hpp"
#include "dihedral/verify.hpp"

#include <string>

namespace dihedral::io {

struct Instance {
  MarginPair margins{MarginVector{}, MarginVector{}};
  MatrixClass matrix_class = MatrixClass::Real;
  SubgroupId subgroup = SubgroupId::Trivial;
};

/// {"rows": [...], "cols": [...], "class": "...", "subgroup": "..."}; entries
/// may be strings ("3", "5/2") or integers. Throws Error(Parse) or the margin
/// errors.
Instance parse_instance(const std::string& json_text);
std::string instance_json(const Instance& inst);

/// Either text (one row per line, whitespace-separated scalars), a JSON
/// array of rows, or a JSON object carrying a "witness" array.
DenseMatrix parse_matrix(const std::string& text);
std::string matrix_text(const DenseMatrix& a);

std::string report_json(const Instance& inst, const FeasibilityReport& report);
std::string report_text(const Instance& inst, const FeasibilityReport& report);

std::string verify_json(const oracle::VerifyReport& report);
std::string verify_text(const oracle::VerifyReport& report);

}  // namespace dihedral::io

#pragma once

#include "dihedral/matrix.hpp"
#include "dihedral/symmetry.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dihedral {

enum class MatrixClass { Real, Integral, ZeroOne };

std::string_view name(MatrixClass c);  // "real", "integral", "zero-one"
std::optional<MatrixClass> parse_matrix_class(std::string_view text);

/// One clause of a characterization, e.g. {"Ainfty.c", false, "..."}.
struct Condition {
  std::string label;
  bool holds = false;
  std::string detail;
};

struct FeasibilityReport {
  bool feasible = false;
  std::vector<Condition> conditions;
  std::optional<DenseMatrix> witness;
  std::string theorem;  // e.g. "Tinfty", "Api2"

  const Condition* find(std::string_view label) const {
    for (const auto& c : conditions)
      if (c.label == label) return &c;
    return nullptr;
  }
};

}  // namespace dihedral

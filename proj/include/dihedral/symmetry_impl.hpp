#pragma once

#include "dihedral/errors.hpp"

namespace dihedral {

template <typename T>
bool is_invariant(const Matrix<T>& a, SubgroupId h) {
  if (requires_square(h) && !a.is_square()) {
    throw Error(ErrorKind::Shape, "subgroup " + std::string(name(h)) + " needs a square matrix");
  }
  for (Symmetry g : generators(h)) {
    if (!(apply(g, a) == a)) return false;
  }
  return true;
}

template <typename T>
bool is_invariant_all_elements(const Matrix<T>& a, SubgroupId h) {
  if (requires_square(h) && !a.is_square()) {
    throw Error(ErrorKind::Shape, "subgroup " + std::string(name(h)) + " needs a square matrix");
  }
  for (Symmetry g : elements(h)) {
    if (!(apply(g, a) == a)) return false;
  }
  return true;
}

}  // namespace dihedral

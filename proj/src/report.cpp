#include "dihedral/report.hpp"

namespace dihedral {

std::string_view name(MatrixClass c) {
  switch (c) {
    case MatrixClass::Real: return "real";
    case MatrixClass::Integral: return "integral";
    case MatrixClass::ZeroOne: return "zero-one";
  }
  return "?";
}

std::optional<MatrixClass> parse_matrix_class(std::string_view text) {
  for (MatrixClass c : {MatrixClass::Real, MatrixClass::Integral, MatrixClass::ZeroOne}) {
    if (name(c) == text) return c;
  }
  return std::nullopt;
}

}  // namespace dihedral

#include "dihedral/matrix.hpp"

namespace dihedral {

DenseMatrix to_dense(const IntMatrix& a) {
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = Scalar(a(i, j));
  return out;
}

IntMatrix to_int(const DenseMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = to_int64(a(i, j));
  return out;
}

}  // namespace dihedral

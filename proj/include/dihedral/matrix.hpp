#pragma once

#include "dihedral/margins.hpp"
#include "dihedral/scalar.hpp"

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace dihedral {

/// Dense row-major m x n matrix. Indices are 0-based throughout the code.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{0}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      assert(row.size() == cols_);
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row_sums() const {
    std::vector<T> out(rows_, T{0});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j);
    return out;
  }
  std::vector<T> col_sums() const {
    std::vector<T> out(cols_, T{0});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[j] += (*this)(i, j);
    return out;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using DenseMatrix = Matrix<Scalar>;

DenseMatrix to_dense(const IntMatrix& a);
/// Throws Error(NotIntegral) on a fractional entry.
IntMatrix to_int(const DenseMatrix& a);

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

/// Permutes rows and columns: out(source_r(k), source_c(l)) = a(k, l). This
/// turns a witness for permuted margins back into one for the original order.
template <typename T>
Matrix<T> unpermute(const Matrix<T>& a, const MirrorPermutation& rows, const MirrorPermutation& cols) {
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.rows(); ++k)
    for (std::size_t l = 0; l < a.cols(); ++l) out(rows.source(k), cols.source(l)) = a(k, l);
  return out;
}

}  // namespace dihedral

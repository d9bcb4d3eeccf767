#pragma once

#include "dihedral/matrix.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace dihedral {

/// Elements of the dihedral group of the square acting on matrices. Row 0 is
/// the top row, so the main diagonal has slope -1.
enum class Symmetry {
  Rot0,
  Rot90,   // counter-clockwise quarter turn
  Rot180,
  Rot270,
  ReflH,   // axis of slope 0 (swaps top and bottom)
  ReflV,   // vertical axis (swaps left and right)
  ReflD,   // main diagonal: transposition
  ReflA,   // antidiagonal
};

inline constexpr std::array<Symmetry, 8> kAllSymmetries = {
    Symmetry::Rot0,  Symmetry::Rot90, Symmetry::Rot180, Symmetry::Rot270,
    Symmetry::ReflH, Symmetry::ReflV, Symmetry::ReflD,  Symmetry::ReflA};

enum class SubgroupId {
  Trivial,
  QuarterTurn,  // D_{pi/2}
  HalfTurn,     // D_pi, centrosymmetric
  Horizontal,   // D_0
  AntiDiagonal, // D_{+1}
  Diagonal,     // D_{-1}, symmetric
  Vertical,     // D_infty
  Cross,        // D_x = {rot0, rot180, reflD, reflA}
  Plus,         // D_+ = {rot0, rot180, reflH, reflV}
  Full,         // D_4
};

inline constexpr std::array<SubgroupId, 10> kAllSubgroups = {
    SubgroupId::Trivial, SubgroupId::QuarterTurn, SubgroupId::HalfTurn, SubgroupId::Horizontal,
    SubgroupId::AntiDiagonal, SubgroupId::Diagonal, SubgroupId::Vertical, SubgroupId::Cross,
    SubgroupId::Plus, SubgroupId::Full};

std::string_view name(Symmetry g);
/// CLI names: trivial, rot90, rot180, h, v, diag, antidiag, times, plus, full.
std::string_view name(SubgroupId h);
std::optional<SubgroupId> parse_subgroup(std::string_view text);

/// g then h applied as apply(g, apply(h, A)).
Symmetry compose(Symmetry g, Symmetry h);
Symmetry inverse(Symmetry g);
/// True for quarter turns and diagonal reflections, which swap m and n.
bool swaps_dimensions(Symmetry g);

/// For the image B = apply(g, A) of an m x n matrix A, the cell of A that
/// B(i, j) is read from.
std::pair<std::size_t, std::size_t> source_cell(Symmetry g, std::size_t i, std::size_t j, std::size_t m,
                                                std::size_t n);

template <typename T>
Matrix<T> apply(Symmetry g, const Matrix<T>& a) {
  const std::size_t m = a.rows(), n = a.cols();
  Matrix<T> out = swaps_dimensions(g) ? Matrix<T>(n, m) : Matrix<T>(m, n);
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      const auto [si, sj] = source_cell(g, i, j, m, n);
      out(i, j) = a(si, sj);
    }
  }
  return out;
}

std::span<const Symmetry> elements(SubgroupId h);
std::span<const Symmetry> generators(SubgroupId h);
bool requires_square(SubgroupId h);

/// Throws Error(Shape) when h needs a square matrix and a is not square.
template <typename T>
bool is_invariant(const Matrix<T>& a, SubgroupId h);

/// Same answer as is_invariant but checks every element instead of generators.
template <typename T>
bool is_invariant_all_elements(const Matrix<T>& a, SubgroupId h);

/// Spreads a nonnegative seed over the group: the entrywise maximum of
/// apply(g, seed) over g in h. The result is invariant whenever the seed's
/// support meets each orbit in cells carrying one common value.
template <typename T>
Matrix<T> orbit_fill(const Matrix<T>& seed, SubgroupId h) {
  Matrix<T> out = seed;
  for (Symmetry g : elements(h)) {
    const Matrix<T> image = apply(g, seed);
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t j = 0; j < out.cols(); ++j)
        if (out(i, j) < image(i, j)) out(i, j) = image(i, j);
  }
  return out;
}

using Cell = std::pair<std::size_t, std::size_t>;
/// Orbits of h on the m x n grid, each sorted row-major, listed by their
/// minimal cell.
std::vector<std::vector<Cell>> cell_orbits(SubgroupId h, std::size_t m, std::size_t n);

}  // namespace dihedral

#include "dihedral/symmetry_impl.hpp"

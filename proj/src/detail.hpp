#pragma once

// Helpers shared by the transport and zero-one deciders.

#include "dihedral/errors.hpp"
#include "dihedral/margins.hpp"
#include "dihedral/matrix.hpp"
#include "dihedral/report.hpp"

#include <string>

namespace dihedral::detail {

inline std::string show(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

inline std::string show(const MarginVector& v) { return "(" + v.to_string() + ")"; }

inline Condition condition(std::string label, bool holds, std::string detail) {
  return Condition{std::move(label), holds, std::move(detail)};
}

inline bool all_hold(const std::vector<Condition>& conditions) {
  for (const auto& c : conditions)
    if (!c.holds) return false;
  return true;
}

inline bool is_even(const IntVector& v) {
  for (auto x : v)
    if (x % 2 != 0) return false;
  return true;
}

inline IntVector upper_part(const IntVector& v) { return IntVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(lower_half(v.size()))); }

// 0-based index of the middle entry of an odd-length vector.
inline std::size_t middle(std::size_t n) { return n / 2; }

inline void require_shape(const MarginPair& p, SubgroupId h) {
  if (requires_square(h) && p.m() != p.n()) {
    throw Error(ErrorKind::Shape, "subgroup " + std::string(name(h)) + " needs square margins, got " +
                                      std::to_string(p.m()) + "x" + std::to_string(p.n()));
  }
}

}  // namespace dihedral::detail

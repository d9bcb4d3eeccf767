#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace dihedral {

/// Exact rational in canonical form (reduced, positive denominator).
using Scalar = boost::multiprecision::cpp_rational;

Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& x);

bool is_integer(const Scalar& x);
/// Throws Error(NotIntegral) when x is not an integer or does not fit.
std::int64_t to_int64(const Scalar& x);

Scalar floor(const Scalar& x);
Scalar ceil(const Scalar& x);
inline Scalar half(const Scalar& x) { return x / 2; }

}  // namespace dihedral

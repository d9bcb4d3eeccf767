#include "dihedral/scalar.hpp"

#include "dihedral/errors.hpp"

#include <cctype>
#include <limits>

namespace dihedral {

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(whole) + "'");
    }
  }
  return boost::multiprecision::cpp_int(std::string(digits));
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  boost::multiprecision::cpp_int num;
  boost::multiprecision::cpp_int den = 1;
  if (slash == std::string_view::npos) {
    num = parse_integer(body, text);
  } else {
    num = parse_integer(body.substr(0, slash), text);
    den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) {
      throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    }
  }
  Scalar value(num, den);
  return negative ? Scalar(-value) : value;
}

std::string format_scalar(const Scalar& x) {
  const auto num = boost::multiprecision::numerator(x);
  const auto den = boost::multiprecision::denominator(x);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

bool is_integer(const Scalar& x) { return boost::multiprecision::denominator(x) == 1; }

std::int64_t to_int64(const Scalar& x) {
  if (!is_integer(x)) {
    throw Error(ErrorKind::NotIntegral, "expected an integer, got " + format_scalar(x));
  }
  const auto num = boost::multiprecision::numerator(x);
  if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::Bounds, "integer out of range: " + format_scalar(x));
  }
  return num.convert_to<std::int64_t>();
}

Scalar floor(const Scalar& x) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(x);
  const cpp_int den = boost::multiprecision::denominator(x);
  cpp_int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) {
    q -= 1;
  }
  return Scalar(q);
}

Scalar ceil(const Scalar& x) { return -floor(Scalar(-x)); }

}  // namespace dihedral

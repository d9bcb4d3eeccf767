#pragma once

#include <stdexcept>
#include <string>

namespace dihedral {

enum class ErrorKind {
  Parse,
  SumMismatch,
  Shape,
  Bounds,
  NotIntegral,
  Infeasible,
  Argument,
};

// Every recoverable failure in the library is an Error; the C API maps the
// kind onto its status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dihedral

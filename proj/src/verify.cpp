#include "dihedral/verify.hpp"

namespace dihedral::oracle {

VerifyReport verify(const DenseMatrix& a, const MarginPair& p, SubgroupId h, MatrixClass c) {
  VerifyReport report;
  if (a.rows() != p.m() || a.cols() != p.n()) {
    report.margins_ok = false;
    report.mismatches.push_back({"dimension", 0, std::to_string(p.m()) + "x" + std::to_string(p.n()),
                                 std::to_string(a.rows()) + "x" + std::to_string(a.cols())});
  } else {
    const auto rows = a.row_sums();
    const auto cols = a.col_sums();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] != p.rows()[i]) {
        report.margins_ok = false;
        report.mismatches.push_back({"row", i, format_scalar(p.rows()[i]), format_scalar(rows[i])});
      }
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] != p.cols()[j]) {
        report.margins_ok = false;
        report.mismatches.push_back({"col", j, format_scalar(p.cols()[j]), format_scalar(cols[j])});
      }
    }
  }

  if (requires_square(h) && !a.is_square()) {
    report.invariant_ok = false;
    report.mismatches.push_back({"shape", 0, "square", std::to_string(a.rows()) + "x" + std::to_string(a.cols())});
  } else {
    for (Symmetry g : elements(h)) {
      if (!(apply(g, a) == a)) {
        report.invariant_ok = false;
        report.mismatches.push_back({"invariance", 0, std::string(name(g)), "changed"});
      }
    }
  }

  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      bool ok = x >= 0;
      if (c == MatrixClass::Integral) ok = ok && is_integer(x);
      if (c == MatrixClass::ZeroOne) ok = (x == 0 || x == 1);
      if (!ok) {
        report.domain_ok = false;
        report.mismatches.push_back({"domain", i * a.cols() + j, std::string(name(c)), format_scalar(x)});
      }
    }
  }
  return report;
}

}  // namespace dihedral::oracle

#include "dihedral/transport.hpp"

#include "detail.hpp"
#include "dihedral/verify.hpp"

#include <algorithm>

namespace dihedral::transport {

using detail::condition;
using detail::show;

DenseMatrix proportional_fill(const MarginPair& p) {
  DenseMatrix t(p.m(), p.n());
  if (p.total() == 0) return t;
  for (std::size_t i = 0; i < p.m(); ++i)
    for (std::size_t j = 0; j < p.n(); ++j) t(i, j) = p.rows()[i] * p.cols()[j] / p.total();
  return t;
}

IntMatrix greedy_integral(const IntVector& rows, const IntVector& cols) {
  if (sum(rows) != sum(cols)) {
    throw Error(ErrorKind::SumMismatch, "transportation totals differ: " + show(rows) + " vs " + show(cols));
  }
  IntMatrix t(rows.size(), cols.size());
  IntVector r = rows, s = cols;
  std::size_t i = 0, j = 0;
  while (i < r.size() && j < s.size()) {
    if (r[i] <= s[j]) {
      t(i, j) = r[i];
      s[j] -= r[i];
      r[i] = 0;
      ++i;
    } else {
      t(i, j) = s[j];
      r[i] -= s[j];
      s[j] = 0;
      ++j;
    }
  }
  return t;
}

DenseMatrix greedy_integral(const MarginPair& p) {
  return to_dense(greedy_integral(p.rows().integers(), p.cols().integers()));
}

MarkerTriple marker_matrices(const IntVector& rows, const IntVector& cols) {
  const std::size_t m = rows.size(), n = cols.size();
  MarkerTriple out{IntMatrix(m, n), IntMatrix(m, n), IntMatrix(m, n)};
  if (n % 2 == 1) {
    for (std::size_t i = 0; i < m; ++i)
      if (rows[i] % 2 != 0) out.rows_marker(i, detail::middle(n)) = 1;
  }
  if (m % 2 == 1) {
    for (std::size_t j = 0; j < n; ++j)
      if (cols[j] % 2 != 0) out.cols_marker(detail::middle(m), j) = 1;
  }
  if (m % 2 == 1 && n % 2 == 1) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) out.plus(i, j) = std::max(out.rows_marker(i, j), out.cols_marker(i, j));
  }
  return out;
}

MarkerTriple marker_matrices(const MarginPair& p) { return marker_matrices(p.rows().integers(), p.cols().integers()); }

namespace {

struct Decision {
  std::string theorem;
  std::vector<Condition> conditions;
  bool feasible = false;
};

// (b) of the vertical-reflection characterization: the middle column absorbs
// the odd row sums.
Condition vertical_parity(const std::string& label, const IntVector& r, const IntVector& s) {
  const std::size_t n = s.size();
  if (n % 2 == 0) {
    return condition(label, detail::is_even(r), "n even: R must be even, R = " + show(r));
  }
  const auto mid = s[detail::middle(n)];
  const auto odd = static_cast<std::int64_t>(odd_count(r));
  return condition(label, mid >= odd,
                   "n odd: s_mid = " + std::to_string(mid) + " >= o(R) = " + std::to_string(odd));
}

// (b) of the horizontal-reflection characterization: the middle row absorbs
// the odd column sums.
Condition horizontal_parity(const std::string& label, const IntVector& r, const IntVector& s) {
  const std::size_t m = r.size();
  if (m % 2 == 0) {
    return condition(label, detail::is_even(s), "m even: S must be even, S = " + show(s));
  }
  const auto mid = r[detail::middle(m)];
  const auto odd = static_cast<std::int64_t>(odd_count(s));
  return condition(label, mid >= odd,
                   "m odd: r_mid = " + std::to_string(mid) + " >= o(S) = " + std::to_string(odd));
}

Decision decide(const MarginPair& p, SubgroupId h, MatrixClass c) {
  const bool integral = c == MatrixClass::Integral;
  const MarginVector& R = p.rows();
  const MarginVector& S = p.cols();
  Decision d;
  auto& conds = d.conditions;
  switch (h) {
    case SubgroupId::Trivial:
      d.theorem = "T";
      conds.push_back(condition("T.sum", true, "sum(R) = sum(S) = " + format_scalar(p.total())));
      break;
    case SubgroupId::HalfTurn:
      d.theorem = "Tpi";
      conds.push_back(condition("Tpi.a", is_palindromic(R), "R palindromic, R = " + show(R)));
      conds.push_back(condition("Tpi.b", is_palindromic(S), "S palindromic, S = " + show(S)));
      break;
    case SubgroupId::Diagonal:
      d.theorem = "Tminus1";
      conds.push_back(condition("Tminus1.a", R == S, "R = S"));
      break;
    case SubgroupId::AntiDiagonal:
      d.theorem = "Tplus1";
      conds.push_back(condition("Tplus1.a", S == reverse(R), "S = R^r, R^r = " + show(reverse(R))));
      break;
    case SubgroupId::Cross:
      d.theorem = "Ttimes";
      conds.push_back(condition("Ttimes.a", R == S, "R = S"));
      conds.push_back(condition("Ttimes.b", is_palindromic(R), "R palindromic, R = " + show(R)));
      break;
    case SubgroupId::Vertical:
      d.theorem = "Tinfty";
      conds.push_back(condition("Tinfty.a", is_palindromic(S), "S palindromic, S = " + show(S)));
      if (integral) conds.push_back(vertical_parity("Tinfty.b", R.integers(), S.integers()));
      break;
    case SubgroupId::Horizontal:
      d.theorem = "T0";
      conds.push_back(condition("T0.a", is_palindromic(R), "R palindromic, R = " + show(R)));
      if (integral) conds.push_back(horizontal_parity("T0.b", R.integers(), S.integers()));
      break;
    case SubgroupId::Plus: {
      d.theorem = "Tplus";
      conds.push_back(condition("Tplus.infty.a", is_palindromic(S), "S palindromic, S = " + show(S)));
      if (integral) conds.push_back(vertical_parity("Tplus.infty.b", R.integers(), S.integers()));
      conds.push_back(condition("Tplus.0.a", is_palindromic(R), "R palindromic, R = " + show(R)));
      if (integral) conds.push_back(horizontal_parity("Tplus.0.b", R.integers(), S.integers()));
      break;
    }
    case SubgroupId::QuarterTurn: {
      d.theorem = "Tpi2";
      conds.push_back(condition("Tpi2.a", R == S, "R = S"));
      conds.push_back(condition("Tpi2.b", is_palindromic(R), "R palindromic, R = " + show(R)));
      if (integral) {
        const IntVector r = R.integers();
        const auto upper = sum(detail::upper_part(r));
        const std::size_t n = r.size();
        conds.push_back(condition("Tpi2.c", upper % 2 == 0,
                                  "r_1 + ... + r_floor(n/2) = " + std::to_string(upper) + " is even"));
        const bool d_holds = n % 2 == 1 && r[detail::middle(n)] >= 2;
        conds.push_back(condition("Tpi2.d", d_holds,
                                  n % 2 == 1 ? "n odd and r_mid = " + std::to_string(r[detail::middle(n)]) + " >= 2"
                                             : "n odd and r_mid >= 2 (n is even)"));
        d.feasible = conds[0].holds && conds[1].holds && (conds[2].holds || conds[3].holds);
        return d;
      }
      break;
    }
    case SubgroupId::Full: {
      d.theorem = "T4";
      conds.push_back(condition("T4.a", R == S, "R = S"));
      conds.push_back(condition("T4.b", is_palindromic(R), "R palindromic, R = " + show(R)));
      if (integral) {
        const IntVector r = R.integers();
        conds.push_back(horizontal_parity("T4.c", r, r));
        conds.back().detail.replace(0, 1, "n");
      }
      break;
    }
  }
  d.feasible = detail::all_hold(conds);
  return d;
}

DenseMatrix diagonal(const MarginVector& r) {
  DenseMatrix a(r.size(), r.size());
  for (std::size_t i = 0; i < r.size(); ++i) a(i, i) = r[i];
  return a;
}

DenseMatrix antidiagonal(const MarginVector& r) {
  const std::size_t n = r.size();
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, n - 1 - i) = r[i];
  return a;
}

// diag(r/2) + antidiag(r/2), real version.
DenseMatrix diag_plus_antidiag(const MarginVector& r) {
  const std::size_t n = r.size();
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) += half(r[i]);
    a(i, n - 1 - i) += half(r[i]);
  }
  return a;
}

// Integral version: diagonal rounded up, antidiagonal rounded down.
IntMatrix diag_plus_antidiag(const IntVector& r) {
  const std::size_t n = r.size();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) += (r[i] + 1) / 2;
    a(i, n - 1 - i) += r[i] / 2;
  }
  return a;
}

// Spreads `amount` over the budget entries front to back.
IntVector fill_under_budget(std::int64_t amount, const IntVector& budget) {
  IntVector out(budget.size(), 0);
  for (std::size_t k = 0; k < budget.size() && amount > 0; ++k) {
    out[k] = std::min(budget[k], amount);
    amount -= out[k];
  }
  if (amount != 0) throw Error(ErrorKind::Infeasible, "budget exhausted while filling a middle line");
  return out;
}

// Centrosymmetric integral witness: settle the middle row and column, then
// a greedy block in the top-left whose half-turn image fills the bottom-right.
IntMatrix half_turn_integral(const IntVector& r, const IntVector& s) {
  const std::size_t m = r.size(), n = s.size();
  const std::size_t mh = lower_half(m), nh = lower_half(n);
  IntMatrix seed(m, n);
  IntVector top(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(mh));
  IntVector left(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(nh));
  const bool mid_row = m % 2 == 1, mid_col = n % 2 == 1;
  const std::int64_t rc = mid_row ? r[m / 2] : 0;
  const std::int64_t sc = mid_col ? s[n / 2] : 0;
  std::int64_t center = 0;
  if (mid_row && mid_col) {
    center = std::min(rc, sc);
    seed(m / 2, n / 2) = center;
  }
  if (mid_col) {
    const auto col = fill_under_budget((sc - center) / 2, top);
    for (std::size_t i = 0; i < mh; ++i) {
      seed(i, n / 2) = col[i];
      top[i] -= col[i];
    }
  }
  if (mid_row) {
    const auto row = fill_under_budget((rc - center) / 2, left);
    for (std::size_t j = 0; j < nh; ++j) {
      seed(m / 2, j) = row[j];
      left[j] -= row[j];
    }
  }
  const IntMatrix block = greedy_integral(top, left);
  for (std::size_t i = 0; i < mh; ++i)
    for (std::size_t j = 0; j < nh; ++j) seed(i, j) = block(i, j);
  return orbit_fill(seed, SubgroupId::HalfTurn);
}

// Vertical reflection: strip the parity marker, then fold the mirror column
// pairs so the greedy runs on half the columns.
IntMatrix vertical_integral(const IntVector& r, const IntVector& s) {
  const std::size_t m = r.size(), n = s.size();
  const std::size_t nh = lower_half(n);
  const IntMatrix marker = marker_matrices(r, s).rows_marker;
  IntVector fold_rows(m), fold_cols(nh);
  for (std::size_t i = 0; i < m; ++i) fold_rows[i] = (r[i] - r[i] % 2) / 2;
  for (std::size_t j = 0; j < nh; ++j) fold_cols[j] = s[j];
  if (n % 2 == 1) fold_cols.push_back((s[n / 2] - static_cast<std::int64_t>(odd_count(r))) / 2);
  const IntMatrix z = greedy_integral(fold_rows, fold_cols);
  IntMatrix a = marker;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nh; ++j) {
      a(i, j) += z(i, j);
      a(i, n - 1 - j) += z(i, j);
    }
    if (n % 2 == 1) a(i, n / 2) += 2 * z(i, nh);
  }
  return a;
}

// Both reflections: strip both parity markers; the middle lines take even
// chunks, the quarter block is a greedy on halved margins.
IntMatrix plus_integral(const IntVector& r, const IntVector& s) {
  const std::size_t m = r.size(), n = s.size();
  const std::size_t mh = lower_half(m), nh = lower_half(n);
  const bool mid_row = m % 2 == 1, mid_col = n % 2 == 1;
  const auto markers = marker_matrices(r, s);
  IntMatrix marker(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      marker(i, j) = std::max(markers.rows_marker(i, j), markers.cols_marker(i, j));
  IntVector rb = r, sb = s;
  const auto mr = marker.row_sums(), mc = marker.col_sums();
  for (std::size_t i = 0; i < m; ++i) rb[i] -= mr[i];
  for (std::size_t j = 0; j < n; ++j) sb[j] -= mc[j];

  IntMatrix seed(m, n);
  IntVector top(rb.begin(), rb.begin() + static_cast<std::ptrdiff_t>(mh));
  IntVector left(sb.begin(), sb.begin() + static_cast<std::ptrdiff_t>(nh));
  std::int64_t center = 0;
  if (mid_row && mid_col) {
    center = std::min(rb[m / 2], sb[n / 2]);
    seed(m / 2, n / 2) = center;
  }
  if (mid_col) {
    const auto col = fill_under_budget((sb[n / 2] - center) / 2, top);
    for (std::size_t i = 0; i < mh; ++i) {
      seed(i, n / 2) = col[i];
      top[i] -= col[i];
    }
  }
  if (mid_row) {
    const auto row = fill_under_budget((rb[m / 2] - center) / 2, left);
    for (std::size_t j = 0; j < nh; ++j) {
      seed(m / 2, j) = row[j];
      left[j] -= row[j];
    }
  }
  for (auto& x : top) x /= 2;
  for (auto& x : left) x /= 2;
  const IntMatrix block = greedy_integral(top, left);
  for (std::size_t i = 0; i < mh; ++i)
    for (std::size_t j = 0; j < nh; ++j) seed(i, j) = block(i, j);
  return orbit_fill(seed, SubgroupId::Plus) + marker;
}

// Quarter turn: top-left block B = D + P where D carries floor(r_i/2) and P
// pairs up the odd upper rows; an unpaired odd row goes to the middle arm.
IntMatrix quarter_turn_integral(const IntVector& r) {
  const std::size_t n = r.size();
  const std::size_t h = lower_half(n);
  IntMatrix seed(n, n);
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < h; ++i) {
    seed(i, i) = r[i] / 2;
    if (r[i] % 2 != 0) odd.push_back(i);
  }
  if (odd.size() % 2 == 1) {
    // Only reachable with n odd and r_mid >= 2.
    seed(odd.back(), n / 2) = 1;
    odd.pop_back();
    seed(n / 2, n / 2) = r[n / 2] - 2;
  } else if (n % 2 == 1) {
    seed(n / 2, n / 2) = r[n / 2];
  }
  for (std::size_t k = 0; k + 1 < odd.size(); k += 2) seed(odd[k], odd[k + 1]) += 1;
  return orbit_fill(seed, SubgroupId::QuarterTurn);
}

// Full group: diag + antidiag on margins stripped of the parity marker.
IntMatrix full_integral(const IntVector& r) {
  const std::size_t n = r.size();
  if (n % 2 == 0) return diag_plus_antidiag(r);
  const IntMatrix marker = marker_matrices(r, r).plus;
  const auto ms = marker.row_sums();
  IntVector rb = r;
  for (std::size_t i = 0; i < n; ++i) rb[i] -= ms[i];
  return diag_plus_antidiag(rb) + marker;
}

void validate(const MarginPair& p, SubgroupId h, MatrixClass c) {
  if (c == MatrixClass::ZeroOne) {
    throw Error(ErrorKind::Argument, "the zero-one class is handled by the zeroone module");
  }
  detail::require_shape(p, h);
  if (c == MatrixClass::Integral && !p.is_integral()) {
    throw Error(ErrorKind::NotIntegral, "integral class needs integer margins");
  }
}

DenseMatrix build(const MarginPair& p, SubgroupId h, MatrixClass c) {
  if (c == MatrixClass::Real) {
    switch (h) {
      case SubgroupId::Diagonal: return diagonal(p.rows());
      case SubgroupId::AntiDiagonal: return antidiagonal(p.rows());
      case SubgroupId::Cross:
      case SubgroupId::Full: return diag_plus_antidiag(p.rows());
      default: return proportional_fill(p);
    }
  }
  const IntVector r = p.rows().integers();
  const IntVector s = p.cols().integers();
  switch (h) {
    case SubgroupId::Trivial: return to_dense(greedy_integral(r, s));
    case SubgroupId::HalfTurn: return to_dense(half_turn_integral(r, s));
    case SubgroupId::Diagonal: return diagonal(p.rows());
    case SubgroupId::AntiDiagonal: return antidiagonal(p.rows());
    case SubgroupId::Cross: return to_dense(diag_plus_antidiag(r));
    case SubgroupId::Vertical: return to_dense(vertical_integral(r, s));
    case SubgroupId::Horizontal: return to_dense(vertical_integral(s, r).transposed());
    case SubgroupId::Plus: return to_dense(plus_integral(r, s));
    case SubgroupId::QuarterTurn: return to_dense(quarter_turn_integral(r));
    case SubgroupId::Full: return to_dense(full_integral(r));
  }
  return {};
}

DenseMatrix verified(DenseMatrix a, const MarginPair& p, SubgroupId h, MatrixClass c) {
  const auto report = oracle::verify(a, p, h, c);
  if (!report.passed()) {
    const auto& first = report.mismatches.front();
    throw std::logic_error("construction for " + std::string(name(h)) + "/" + std::string(name(c)) +
                           " failed verification: " + first.kind + " " + std::to_string(first.index));
  }
  return a;
}

}  // namespace

FeasibilityReport feasible(const MarginPair& p, SubgroupId h, MatrixClass c) {
  validate(p, h, c);
  Decision d = decide(p, h, c);
  FeasibilityReport report;
  report.theorem = d.theorem;
  report.conditions = std::move(d.conditions);
  report.feasible = d.feasible;
  if (d.feasible) report.witness = verified(build(p, h, c), p, h, c);
  return report;
}

DenseMatrix construct(const MarginPair& p, SubgroupId h, MatrixClass c) {
  validate(p, h, c);
  if (!decide(p, h, c).feasible) {
    throw Error(ErrorKind::Infeasible, "the " + std::string(name(c)) + " class for subgroup " +
                                           std::string(name(h)) + " is empty");
  }
  return verified(build(p, h, c), p, h, c);
}

}  // namespace dihedral::transport

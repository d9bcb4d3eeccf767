#include "dihedral/zeroone.hpp"

#include "detail.hpp"
#include "dihedral/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dihedral::zeroone {

using detail::condition;
using detail::show;

namespace {

bool nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

// Describes why `big` fails to majorize `small`, or confirms that it does.
std::string majorization_detail(const std::string& big_name, const IntVector& big, const std::string& small_name,
                                const IntVector& small) {
  const auto a = decreasing_rearrangement(big);
  const auto b = decreasing_rearrangement(small);
  std::string text = big_name + " = " + show(a) + " vs " + small_name + " = " + show(b);
  std::int64_t pa = 0, pb = 0;
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    if (k < a.size()) pa += a[k];
    if (k < b.size()) pb += b[k];
    if (pa < pb) {
      return text + ": fails at prefix " + std::to_string(k + 1) + ": " + std::to_string(pb) + " > " +
             std::to_string(pa);
    }
  }
  if (pa != pb) return text + ": totals differ (" + std::to_string(pa) + " vs " + std::to_string(pb) + ")";
  return text + ": majorized";
}

IntVector drop_middle(const IntVector& v) {
  IntVector out = v;
  if (v.size() % 2 == 1) out.erase(out.begin() + static_cast<std::ptrdiff_t>(v.size() / 2));
  return out;
}

IntVector floor_halves_upper(const IntVector& v) {
  IntVector out = detail::upper_part(v);
  for (auto& x : out) x /= 2;
  return out;
}

// ---------------------------------------------------------------------------
// Uniform-capacity transportation: entries in [0, cap], exact test by the
// cut inequalities sum_{j<=k} s_j <= sum_i min(r_i, cap*k) on sorted s.

bool capped_feasible(const IntVector& r, const IntVector& s, std::int64_t cap) {
  if (!nonnegative(r) || !nonnegative(s) || sum(r) != sum(s)) return false;
  const auto sorted = decreasing_rearrangement(s);
  std::int64_t prefix = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    prefix += sorted[k];
    std::int64_t room = 0;
    const std::int64_t width = cap * static_cast<std::int64_t>(k + 1);
    for (auto x : r) room += std::min(x, width);
    if (prefix > room) return false;
  }
  return true;
}

// Column by column; each column is the first assignment (rows by decreasing
// residual, larger values first) that leaves a feasible remainder.
IntMatrix capped_construct(const IntVector& rows, const IntVector& cols, std::int64_t cap) {
  const std::size_t m = rows.size(), n = cols.size();
  IntMatrix out(m, n);
  IntVector resid = rows;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return resid[a] > resid[b]; });
    const IntVector rest(cols.begin() + static_cast<std::ptrdiff_t>(j + 1), cols.end());
    std::vector<std::int64_t> column(m, 0);
    std::function<bool(std::size_t, std::int64_t)> place = [&](std::size_t k, std::int64_t need) -> bool {
      if (k == m) {
        if (need != 0) return false;
        IntVector after = resid;
        for (std::size_t i = 0; i < m; ++i) after[i] -= column[i];
        return capped_feasible(after, rest, cap);
      }
      std::int64_t room = 0;
      for (std::size_t t = k; t < m; ++t) room += std::min(cap, resid[order[t]]);
      if (room < need) return false;
      const std::size_t i = order[k];
      for (std::int64_t v = std::min({cap, resid[i], need}); v >= 0; --v) {
        column[i] = v;
        if (place(k + 1, need - v)) return true;
      }
      column[i] = 0;
      return false;
    };
    if (!place(0, cols[j])) {
      throw std::logic_error("capped transportation search exhausted on a certified instance");
    }
    for (std::size_t i = 0; i < m; ++i) {
      out(i, j) = column[i];
      resid[i] -= column[i];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric row-by-row search. Row i fixes cells (i, j >= i); the remaining
// rows must then pass `remainder_ok`, which is an exact existence test, so the
// search never has to revisit a completed row.

IntMatrix symmetric_search(const IntVector& r, std::int64_t max_value, bool larger_first,
                           const std::function<bool(const IntVector&)>& remainder_ok) {
  const std::size_t n = r.size();
  IntMatrix a(n, n);
  IntVector resid = r;
  std::function<bool(std::size_t)> row;
  std::function<bool(std::size_t, std::size_t, std::int64_t)> cell = [&](std::size_t i, std::size_t j,
                                                                          std::int64_t need) -> bool {
    if (j == n) {
      if (need != 0) return false;
      const IntVector rest(resid.begin() + static_cast<std::ptrdiff_t>(i + 1), resid.end());
      return remainder_ok(rest) && row(i + 1);
    }
    std::int64_t room = std::min(max_value, need);
    for (std::size_t t = j + 1; t < n; ++t) room += std::min(max_value, resid[t]);
    if (j > i) room = room - std::min(max_value, need) + std::min(max_value, resid[j]);
    if (room < need) return false;
    const std::int64_t hi = std::min({max_value, need, j == i ? need : resid[j]});
    for (std::int64_t step = 0; step <= hi; ++step) {
      const std::int64_t v = larger_first ? hi - step : step;
      a(i, j) = v;
      a(j, i) = v;
      if (j > i) resid[j] -= v;
      const bool ok = cell(i, j + 1, need - v);
      if (j > i) resid[j] += v;
      if (ok) return true;
    }
    a(i, j) = 0;
    a(j, i) = 0;
    return false;
  };
  row = [&](std::size_t i) -> bool {
    if (i == n) return true;
    const std::int64_t need = resid[i];
    resid[i] = 0;
    const bool ok = cell(i, i, need);
    if (!ok) resid[i] = need;
    return ok;
  };
  if (!row(0)) throw std::logic_error("symmetric search exhausted on a certified instance");
  return a;
}

bool symmetric_01_exists(const IntVector& r) { return nonnegative(r) && majorizes(conjugate(r), r); }

// ---------------------------------------------------------------------------
// Centrosymmetric (0,1) decisions and witnesses.

struct CentroCheck {
  bool rows_palindromic = false;
  bool cols_palindromic = false;
  bool reduced_ok = false;
  bool gale_ryser = false;
  std::string reduce_detail;
  std::string gr_detail;
  bool feasible() const { return rows_palindromic && cols_palindromic && reduced_ok && gale_ryser; }
};

CentroCheck centro_check(const IntVector& r, const IntVector& s) {
  CentroCheck c;
  c.rows_palindromic = is_palindromic(r);
  c.cols_palindromic = is_palindromic(s);
  if (!c.rows_palindromic || !c.cols_palindromic) {
    c.reduce_detail = "needs palindromic margins";
    c.gr_detail = "needs palindromic margins";
    return c;
  }
  try {
    const ReducedPair red = centro_reduce(r, s);
    c.reduced_ok = true;
    c.reduce_detail = "reduced to R' = " + show(red.rows) + ", S' = " + show(red.cols);
    c.gale_ryser = gale_ryser_feasible(red.rows, red.cols);
    c.gr_detail = majorization_detail("conjugate(R')", conjugate(red.rows), "S'", red.cols);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Infeasible) throw;
    c.reduce_detail = e.what();
    c.gr_detail = "not reached";
  }
  return c;
}

IntMatrix centro_construct(const IntVector& r, const IntVector& s) {
  const ReducedPair red = centro_reduce(r, s);
  const std::size_t m = red.rows.size(), n = red.cols.size();
  const IntVector top(red.rows.begin(), red.rows.begin() + static_cast<std::ptrdiff_t>(m / 2));
  const IntVector left(red.cols.begin(), red.cols.begin() + static_cast<std::ptrdiff_t>(n / 2));
  const IntMatrix u = capped_construct(top, left, 2);
  IntMatrix seed(m, n);
  for (std::size_t i = 0; i < m / 2; ++i) {
    for (std::size_t j = 0; j < n / 2; ++j) {
      if (u(i, j) >= 1) seed(i, j) = 1;
      if (u(i, j) == 2) seed(i, n - 1 - j) = 1;
    }
  }
  return unwind(red, orbit_fill(seed, SubgroupId::HalfTurn));
}

bool cross_feasible(const IntVector& r) {
  if (!nonnegative(r) || !is_palindromic(r)) return false;
  return centro_check(r, r).feasible();
}

// Peels the outer ring of a matrix symmetric under both diagonals: the first
// row of the ring determines the whole ring, and the inner residual must stay
// feasible.
IntMatrix cross_construct(const IntVector& r) {
  const std::size_t n = r.size();
  IntMatrix a(n, n);
  IntVector resid = r;
  for (std::size_t lo = 0; lo < n / 2 + n % 2; ++lo) {
    const std::size_t hi = n - 1 - lo;
    if (lo == hi) {
      a(lo, lo) = resid[lo];
      break;
    }
    const std::size_t inner = hi - lo - 1;
    std::vector<std::int64_t> x(inner, 0);
    bool found = false;
    auto inner_residual = [&]() {
      IntVector v(inner);
      for (std::size_t t = 0; t < inner; ++t) v[t] = resid[lo + 1 + t] - x[t] - x[inner - 1 - t];
      return v;
    };
    std::function<bool(std::size_t, std::int64_t)> choose = [&](std::size_t k, std::int64_t need) -> bool {
      if (need < 0) return false;
      if (k == inner) {
        // Remaining need goes to the corner cells (lo,lo) and (lo,hi).
        for (std::int64_t corner = 0; corner <= 1; ++corner) {
          const std::int64_t anti = need - corner;
          if (anti < 0 || anti > 1) continue;
          if (!cross_feasible(inner_residual())) return false;
          a(lo, lo) = a(hi, hi) = corner;
          a(lo, hi) = a(hi, lo) = anti;
          return true;
        }
        return false;
      }
      if (static_cast<std::int64_t>(inner - k) + 2 < need) return false;
      for (std::int64_t v = 0; v <= 1; ++v) {
        x[k] = v;
        if (choose(k + 1, need - v)) return true;
      }
      x[k] = 0;
      return false;
    };
    found = choose(0, resid[lo]);
    if (!found) throw std::logic_error("cross-symmetric search exhausted on a certified instance");
    for (std::size_t t = 0; t < inner; ++t) {
      const std::size_t j = lo + 1 + t;
      a(lo, j) = a(j, lo) = x[t];
      a(hi, n - 1 - j) = a(n - 1 - j, hi) = x[t];
    }
    const IntVector v = inner_residual();
    for (std::size_t t = 0; t < inner; ++t) resid[lo + 1 + t] = v[t];
  }
  return a;
}

// ---------------------------------------------------------------------------
// Per-subgroup conditions.

struct Decision {
  std::string theorem;
  std::vector<Condition> conditions;
  bool feasible = false;
};

// Conditions for invariance under the reflection that swaps mirror columns.
// `prefix`, `row_name` and `col_name` let the transpose reuse it.
void vertical_conditions(const IntVector& r, const IntVector& s, const std::string& prefix,
                         const std::string& row_name, const std::string& col_name, std::vector<Condition>& out) {
  const std::size_t n = s.size();
  out.push_back(condition(prefix + ".a", is_palindromic(s), col_name + " palindromic, " + col_name + " = " + show(s)));
  if (n % 2 == 0) {
    out.push_back(condition(prefix + ".b", detail::is_even(r), "even length: " + row_name + " must be even"));
  } else {
    const auto odd = static_cast<std::int64_t>(odd_count(r));
    out.push_back(condition(prefix + ".b", s[n / 2] >= odd,
                            "odd length: middle of " + col_name + " = " + std::to_string(s[n / 2]) + " >= o(" +
                                row_name + ") = " + std::to_string(odd)));
  }
  IntVector rb = r;
  for (auto& x : rb) x -= x % 2;
  const IntVector sb = drop_middle(s);
  out.push_back(condition(prefix + ".c", majorizes(conjugate(rb), sb),
                          majorization_detail("conjugate(" + row_name + "bar)", conjugate(rb), col_name + "bar", sb)));
}

std::int64_t pi2_sum_upper(const IntVector& r) { return sum(detail::upper_part(r)); }

// Upper half of the normalized margin with the middle-arm ones removed.
IntVector quarter_turn_reduced(const IntVector& r) {
  IntVector top = decreasing_rearrangement(detail::upper_part(r));
  if (r.size() % 2 == 1) {
    const auto s = static_cast<std::size_t>(r[r.size() / 2] / 2);
    for (std::size_t i = 0; i < s && i < top.size(); ++i) top[i] -= 1;
    if (s > top.size()) top.assign(1, -1);
  }
  return top;
}

Decision decide(const MarginPair& p, SubgroupId h) {
  const IntVector r = p.rows().integers();
  const IntVector s = p.cols().integers();
  Decision d;
  auto& conds = d.conditions;
  switch (h) {
    case SubgroupId::Trivial:
      d.theorem = "A";
      conds.push_back(condition("A.gr", gale_ryser_feasible(r, s), majorization_detail("R*", conjugate(r), "S", s)));
      break;
    case SubgroupId::HalfTurn: {
      d.theorem = "Api";
      const CentroCheck c = centro_check(r, s);
      conds.push_back(condition("Api.a", c.rows_palindromic, "R palindromic, R = " + show(r)));
      conds.push_back(condition("Api.b", c.cols_palindromic, "S palindromic, S = " + show(s)));
      conds.push_back(condition("Api.reduce", c.reduced_ok, c.reduce_detail));
      conds.push_back(condition("Api.c", c.gale_ryser, c.gr_detail));
      break;
    }
    case SubgroupId::Diagonal:
      d.theorem = "Aminus1";
      conds.push_back(condition("Aminus1.a", r == s, "R = S"));
      conds.push_back(condition("Aminus1.b", symmetric_01_exists(r), majorization_detail("R*", conjugate(r), "R", r)));
      break;
    case SubgroupId::AntiDiagonal: {
      d.theorem = "Aplus1";
      const IntVector rr = reverse(r);
      conds.push_back(condition("Aplus1.a", s == rr, "S = R^r, R^r = " + show(rr)));
      conds.push_back(condition("Aplus1.b", majorizes(conjugate(r), rr), majorization_detail("R*", conjugate(r), "R^r", rr)));
      break;
    }
    case SubgroupId::Cross: {
      d.theorem = "Atimes";
      conds.push_back(condition("Atimes.a", r == s, "R = S"));
      const CentroCheck c = centro_check(r, r);
      std::string why = "A^pi(R,R) nonempty";
      if (!c.rows_palindromic) why += ": R is not palindromic";
      else if (!c.reduced_ok) why += ": " + c.reduce_detail;
      else why += ": " + c.gr_detail;
      conds.push_back(condition("Atimes.b", c.feasible(), why));
      break;
    }
    case SubgroupId::Vertical:
      d.theorem = "Ainfty";
      vertical_conditions(r, s, "Ainfty", "R", "S", conds);
      break;
    case SubgroupId::Horizontal:
      d.theorem = "A0";
      vertical_conditions(s, r, "A0", "S", "R", conds);
      break;
    case SubgroupId::Plus: {
      d.theorem = "Aplus";
      std::vector<Condition> v, hz;
      vertical_conditions(r, s, "Aplus.infty", "R", "S", v);
      vertical_conditions(s, r, "Aplus.0", "S", "R", hz);
      conds.push_back(v[0]);
      conds.push_back(v[1]);
      conds.push_back(hz[0]);
      conds.push_back(hz[1]);
      const std::size_t m = r.size(), n = s.size();
      bool c_holds = true;
      std::string c_text;
      if (n % 2 == 1) {
        c_holds = c_holds && static_cast<std::int64_t>(odd_count(r)) == s[n / 2];
        c_text += "o(R) = " + std::to_string(odd_count(r)) + " vs s_mid = " + std::to_string(s[n / 2]) + "; ";
      }
      if (m % 2 == 1) {
        c_holds = c_holds && static_cast<std::int64_t>(odd_count(s)) == r[m / 2];
        c_text += "o(S) = " + std::to_string(odd_count(s)) + " vs r_mid = " + std::to_string(r[m / 2]) + "; ";
      }
      if (c_text.empty()) c_text = "both dimensions even";
      conds.push_back(condition("Aplus.c", c_holds, c_text));
      const IntVector rq = floor_halves_upper(r), sq = floor_halves_upper(s);
      conds.push_back(condition("Aplus.d", gale_ryser_feasible(rq, sq),
                                majorization_detail("conjugate(Rcheck)", conjugate(rq), "Scheck", sq)));
      break;
    }
    case SubgroupId::QuarterTurn: {
      d.theorem = "Api2";
      const std::size_t n = r.size();
      conds.push_back(condition("Api2.a", r == s, "R = S"));
      conds.push_back(condition("Api2.b", is_palindromic(r), "R palindromic, R = " + show(r)));
      const auto upper = pi2_sum_upper(r);
      conds.push_back(condition("Api2.c", upper % 2 == 0,
                                "r_1 + ... + r_floor(n/2) = " + std::to_string(upper) + " is even"));
      conds.push_back(condition("Api2.d", n % 2 == 1 && r[n / 2] >= 2,
                                n % 2 == 1 ? "n odd and r_mid = " + std::to_string(r[n / 2]) + " >= 2"
                                           : "n odd and r_mid >= 2 (n is even)"));
      const IntVector rb = quarter_turn_reduced(r);
      const bool rb_ok = nonnegative(rb) && symmetric_012_feasible(rb);
      conds.push_back(condition("Api2.e", rb_ok, "Rbar = " + show(rb) + " satisfies the symmetric (0,1,2) inequalities"));
      const bool even = nonnegative(rb) && sum(rb) % 2 == 0;
      conds.push_back(condition("Api2.f", even, "sum(Rbar) = " + std::to_string(sum(rb)) + " is even"));
      d.feasible = conds[0].holds && conds[1].holds && (conds[2].holds || conds[3].holds) && conds[4].holds &&
                   conds[5].holds;
      return d;
    }
    case SubgroupId::Full: {
      d.theorem = "A4";
      const std::size_t n = r.size();
      conds.push_back(condition("A4.a", r == s, "R = S"));
      conds.push_back(condition("A4.b", is_palindromic(r), "R palindromic, R = " + show(r)));
      if (n % 2 == 0) {
        conds.push_back(condition("A4.c", detail::is_even(r), "n even: R must be even"));
      } else {
        conds.push_back(condition("A4.c", static_cast<std::int64_t>(odd_count(r)) == r[n / 2],
                                  "n odd: o(R) = " + std::to_string(odd_count(r)) + " = r_mid = " +
                                      std::to_string(r[n / 2])));
      }
      const IntVector rq = floor_halves_upper(r);
      conds.push_back(condition("A4.d", symmetric_01_exists(rq),
                                majorization_detail("conjugate(Rcheck)", conjugate(rq), "Rcheck", rq)));
      break;
    }
  }
  d.feasible = detail::all_hold(conds);
  return d;
}

// ---------------------------------------------------------------------------
// Witnesses. Each assumes its decision came back feasible.

IntMatrix vertical_witness(const IntVector& r, const IntVector& s) {
  const std::size_t m = r.size(), n = s.size();
  IntVector half_rows(m);
  for (std::size_t i = 0; i < m; ++i) half_rows[i] = (r[i] - r[i] % 2) / 2;
  const IntVector left(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n / 2));
  if (!gale_ryser_feasible(half_rows, left)) {
    throw std::logic_error("half problem of a feasible reflection instance fails Gale-Ryser");
  }
  const IntMatrix b = gale_ryser_construct(half_rows, left);
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n / 2; ++j) a(i, j) = a(i, n - 1 - j) = b(i, j);
    if (n % 2 == 1) a(i, n / 2) = r[i] % 2;
  }
  return a;
}

IntMatrix plus_witness(const IntVector& r, const IntVector& s) {
  const std::size_t m = r.size(), n = s.size();
  const IntMatrix quarter = gale_ryser_construct(floor_halves_upper(r), floor_halves_upper(s));
  IntMatrix seed(m, n);
  for (std::size_t i = 0; i < m / 2; ++i)
    for (std::size_t j = 0; j < n / 2; ++j) seed(i, j) = quarter(i, j);
  std::int64_t middle_row_left = 0;
  if (n % 2 == 1)
    for (std::size_t i = 0; i < m / 2; ++i) seed(i, n / 2) = r[i] % 2;
  if (m % 2 == 1) {
    for (std::size_t j = 0; j < n / 2; ++j) {
      seed(m / 2, j) = s[j] % 2;
      middle_row_left += s[j] % 2;
    }
  }
  if (m % 2 == 1 && n % 2 == 1) seed(m / 2, n / 2) = r[m / 2] - 2 * middle_row_left;
  return orbit_fill(seed, SubgroupId::Plus);
}

IntMatrix quarter_turn_witness(const IntVector& r) {
  const std::size_t n = r.size();
  const auto [normal, order] = normalize_initially_nonincreasing(r);
  const IntVector rb = quarter_turn_reduced(normal);
  const IntMatrix b = split_symmetric(clean_diagonal(symmetric_012_construct(rb)));
  IntMatrix seed(n, n);
  for (std::size_t i = 0; i < n / 2; ++i)
    for (std::size_t j = 0; j < n / 2; ++j) seed(i, j) = b(i, j);
  if (n % 2 == 1) {
    const auto arm = static_cast<std::size_t>(normal[n / 2] / 2);
    for (std::size_t i = 0; i < arm; ++i) seed(i, n / 2) = 1;
    seed(n / 2, n / 2) = normal[n / 2] % 2;
  }
  return unpermute(orbit_fill(seed, SubgroupId::QuarterTurn), order, order);
}

IntMatrix full_witness(const IntVector& r) {
  const std::size_t n = r.size();
  const IntMatrix b = symmetric_01_construct(floor_halves_upper(r));
  IntMatrix seed(n, n);
  for (std::size_t i = 0; i < n / 2; ++i)
    for (std::size_t j = 0; j < n / 2; ++j) seed(i, j) = b(i, j);
  if (n % 2 == 1) {
    for (std::size_t i = 0; i < n / 2; ++i) seed(i, n / 2) = r[i] % 2;
    seed(n / 2, n / 2) = r[n / 2] % 2;
  }
  return orbit_fill(seed, SubgroupId::Full);
}

IntMatrix build(const MarginPair& p, SubgroupId h) {
  const IntVector r = p.rows().integers();
  const IntVector s = p.cols().integers();
  switch (h) {
    case SubgroupId::Trivial: return gale_ryser_construct(r, s);
    case SubgroupId::HalfTurn: return centro_construct(r, s);
    case SubgroupId::Diagonal: return symmetric_01_construct(r);
    case SubgroupId::AntiDiagonal: return apply(Symmetry::Rot90, symmetric_01_construct(reverse(r)));
    case SubgroupId::Cross: return cross_construct(r);
    case SubgroupId::Vertical: return vertical_witness(r, s);
    case SubgroupId::Horizontal: return vertical_witness(s, r).transposed();
    case SubgroupId::Plus: return plus_witness(r, s);
    case SubgroupId::QuarterTurn: return quarter_turn_witness(r);
    case SubgroupId::Full: return full_witness(r);
  }
  return {};
}

void validate(const MarginPair& p, SubgroupId h) {
  if (!p.is_integral()) throw Error(ErrorKind::NotIntegral, "zero-one class needs integer margins");
  if (!p.within_zero_one_bounds()) {
    throw Error(ErrorKind::Bounds, "zero-one class needs r_i <= n and s_j <= m");
  }
  detail::require_shape(p, h);
}

DenseMatrix verified(const IntMatrix& a, const MarginPair& p, SubgroupId h) {
  DenseMatrix dense = to_dense(a);
  const auto report = oracle::verify(dense, p, h, MatrixClass::ZeroOne);
  if (!report.passed()) {
    const auto& first = report.mismatches.front();
    throw std::logic_error("zero-one construction for " + std::string(name(h)) + " failed verification: " +
                           first.kind + " " + std::to_string(first.index));
  }
  return dense;
}

}  // namespace

bool gale_ryser_feasible(const IntVector& rows, const IntVector& cols) {
  if (!nonnegative(rows) || !nonnegative(cols)) return false;
  return majorizes(conjugate(rows), cols);
}

bool gale_ryser_feasible(const MarginPair& p) {
  if (!p.is_integral()) throw Error(ErrorKind::NotIntegral, "Gale-Ryser needs integer margins");
  if (!p.within_zero_one_bounds()) throw Error(ErrorKind::Bounds, "zero-one class needs r_i <= n and s_j <= m");
  return gale_ryser_feasible(p.rows().integers(), p.cols().integers());
}

IntMatrix gale_ryser_construct(const IntVector& rows, const IntVector& cols) {
  if (!gale_ryser_feasible(rows, cols)) {
    throw Error(ErrorKind::Infeasible, "Gale-Ryser condition fails for R = " + show(rows) + ", S = " + show(cols));
  }
  const std::size_t m = rows.size(), n = cols.size();
  IntMatrix a(m, n);
  IntVector resid = rows;
  std::vector<std::size_t> col_order(n);
  std::iota(col_order.begin(), col_order.end(), std::size_t{0});
  std::stable_sort(col_order.begin(), col_order.end(), [&](std::size_t x, std::size_t y) { return cols[x] > cols[y]; });
  std::vector<std::size_t> row_order(m);
  for (std::size_t j : col_order) {
    std::iota(row_order.begin(), row_order.end(), std::size_t{0});
    std::stable_sort(row_order.begin(), row_order.end(), [&](std::size_t x, std::size_t y) { return resid[x] > resid[y]; });
    for (std::int64_t k = 0; k < cols[j]; ++k) {
      const std::size_t i = row_order[static_cast<std::size_t>(k)];
      a(i, j) = 1;
      resid[i] -= 1;
    }
  }
  return a;
}

DenseMatrix gale_ryser_construct(const MarginPair& p) {
  if (!gale_ryser_feasible(p)) throw Error(ErrorKind::Infeasible, "Gale-Ryser condition fails");
  return to_dense(gale_ryser_construct(p.rows().integers(), p.cols().integers()));
}

ReducedPair centro_reduce(const IntVector& rows, const IntVector& cols) {
  auto [r, row_order] = normalize_initially_nonincreasing(rows);
  auto [s, col_order] = normalize_initially_nonincreasing(cols);
  const std::size_t m = r.size(), n = s.size();
  ReducedPair out;
  out.trace.m = m;
  out.trace.n = n;
  out.trace.row_order = row_order;
  out.trace.col_order = col_order;

  // Ones in the middle row land in the k outermost columns on each side, and
  // symmetrically for the middle column.
  auto outer = [](std::size_t len, std::size_t k) {
    std::vector<std::size_t> idx;
    for (std::size_t t = 0; t < k; ++t) idx.push_back(t);
    for (std::size_t t = 0; t < k; ++t) idx.push_back(len - k + t);
    return idx;
  };
  auto take = [](IntVector& v, const std::vector<std::size_t>& idx, const char* what) {
    for (std::size_t t : idx) {
      v[t] -= 1;
      if (v[t] < 0) throw Error(ErrorKind::Infeasible, std::string("decrementing ") + what + " went negative");
    }
  };
  const bool m_odd = m % 2 == 1, n_odd = n % 2 == 1;
  const std::int64_t rc = m_odd ? r[m / 2] : 0;
  const std::int64_t sc = n_odd ? s[n / 2] : 0;
  if (m_odd && !n_odd && rc % 2 != 0) throw Error(ErrorKind::Argument, "middle row sum must be even when n is even");
  if (!m_odd && n_odd && sc % 2 != 0) throw Error(ErrorKind::Argument, "middle column sum must be even when m is even");
  if (m_odd && n_odd && rc % 2 != sc % 2) throw Error(ErrorKind::Argument, "middle row and column sums differ in parity");

  const std::size_t row_k = static_cast<std::size_t>(rc / 2);  // ones on each side of the middle row
  const std::size_t col_k = static_cast<std::size_t>(sc / 2);  // ones above and below the middle column
  IntVector rr = m_odd ? drop_middle(r) : r;
  IntVector ss = n_odd ? drop_middle(s) : s;
  if (m_odd) {
    if (2 * row_k > ss.size()) throw Error(ErrorKind::Infeasible, "middle row sum exceeds the available columns");
    const auto idx = outer(ss.size(), row_k);
    take(ss, idx, "column sums");
    for (std::size_t t : idx) out.trace.middle_row_ones.push_back(t < n / 2 ? t : t + (n_odd ? 1 : 0));
  }
  if (n_odd) {
    if (2 * col_k > rr.size()) throw Error(ErrorKind::Infeasible, "middle column sum exceeds the available rows");
    const auto idx = outer(rr.size(), col_k);
    take(rr, idx, "row sums");
    for (std::size_t t : idx) out.trace.middle_col_ones.push_back(t < m / 2 ? t : t + (m_odd ? 1 : 0));
  }
  if (m_odd && n_odd) out.trace.center = rc % 2;
  out.rows = std::move(rr);
  out.cols = std::move(ss);
  return out;
}

IntMatrix unwind(const ReducedPair& reduced, const IntMatrix& witness) {
  const auto& t = reduced.trace;
  const bool m_odd = t.m % 2 == 1, n_odd = t.n % 2 == 1;
  if (witness.rows() != reduced.rows.size() || witness.cols() != reduced.cols.size()) {
    throw Error(ErrorKind::Argument, "witness shape does not match the reduced margins");
  }
  IntMatrix full(t.m, t.n);
  for (std::size_t i = 0; i < witness.rows(); ++i) {
    const std::size_t fi = m_odd && i >= t.m / 2 ? i + 1 : i;
    for (std::size_t j = 0; j < witness.cols(); ++j) {
      const std::size_t fj = n_odd && j >= t.n / 2 ? j + 1 : j;
      full(fi, fj) = witness(i, j);
    }
  }
  for (std::size_t j : t.middle_row_ones) full(t.m / 2, j) = 1;
  for (std::size_t i : t.middle_col_ones) full(i, t.n / 2) = 1;
  if (m_odd && n_odd) full(t.m / 2, t.n / 2) = t.center;
  return unpermute(full, t.row_order, t.col_order);
}

IntMatrix symmetric_01_construct(const IntVector& r) {
  if (!symmetric_01_exists(r)) {
    throw Error(ErrorKind::Infeasible, show(r) + " is not majorized by its conjugate");
  }
  return symmetric_search(r, 1, false, symmetric_01_exists);
}

bool symmetric_012_feasible(const IntVector& r) {
  if (!nonnegative(r)) return false;
  const auto v = decreasing_rearrangement(r);
  const std::size_t n = v.size();
  IntVector prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + v[i];
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = k; l <= n; ++l) {
      const std::int64_t lhs = 2 * static_cast<std::int64_t>(k * l);
      const std::int64_t rhs = prefix[k] - (prefix[n] - prefix[l]);
      if (lhs < rhs) return false;
    }
  }
  return true;
}

IntMatrix symmetric_012_construct(const IntVector& r) {
  if (!symmetric_012_feasible(r)) {
    throw Error(ErrorKind::Infeasible, "no symmetric (0,1,2)-matrix has row sums " + show(r));
  }
  return symmetric_search(r, 2, true, symmetric_012_feasible);
}

IntMatrix clean_diagonal(IntMatrix m) {
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, i) == 1) ones.push_back(i);
  if (ones.size() % 2 != 0) throw Error(ErrorKind::Argument, "odd number of diagonal ones");
  for (std::size_t k = 0; k < ones.size(); k += 2) {
    const std::size_t p = ones[k], q = ones[k + 1];
    switch (m(p, q)) {
      case 0:
        m(p, p) = m(q, q) = 0;
        m(p, q) = m(q, p) = 1;
        break;
      case 1:
        m(p, p) = m(q, q) = 0;
        m(p, q) = m(q, p) = 2;
        break;
      case 2:
        m(p, p) = m(q, q) = 2;
        m(p, q) = m(q, p) = 1;
        break;
      default: throw Error(ErrorKind::Argument, "entries must lie in {0,1,2}");
    }
  }
  return m;
}

IntMatrix split_symmetric(const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (m(i, j) != m(j, i)) throw Error(ErrorKind::Argument, "matrix is not symmetric");
      switch (m(i, j)) {
        case 0: break;
        case 1:
          if (i == j) throw Error(ErrorKind::Argument, "diagonal one cannot be split");
          b(j, i) = 1;
          break;
        case 2: b(i, j) = b(j, i) = 1; break;
        default: throw Error(ErrorKind::Argument, "entries must lie in {0,1,2}");
      }
    }
  }
  return b;
}

FeasibilityReport feasible01(const MarginPair& p, SubgroupId h) {
  validate(p, h);
  Decision d = decide(p, h);
  FeasibilityReport report;
  report.theorem = d.theorem;
  report.conditions = std::move(d.conditions);
  report.feasible = d.feasible;
  if (d.feasible) report.witness = verified(build(p, h), p, h);
  return report;
}

DenseMatrix construct01(const MarginPair& p, SubgroupId h) {
  validate(p, h);
  if (!decide(p, h).feasible) {
    throw Error(ErrorKind::Infeasible, "the zero-one class for subgroup " + std::string(name(h)) + " is empty");
  }
  return verified(build(p, h), p, h);
}

}  // namespace dihedral::zeroone

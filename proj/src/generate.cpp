#include "dihedral/generate.hpp"

#include <optional>

namespace dihedral::generate {

namespace {

// Plain modulo draws keep the output identical across standard libraries.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::optional<IntVector> spread(std::mt19937_64& rng, std::size_t len, std::int64_t total, std::int64_t cap) {
  if (total < 0 || total > static_cast<std::int64_t>(len) * cap) return std::nullopt;
  IntVector v(len, 0);
  for (std::int64_t unit_count = 0; unit_count < total; ++unit_count) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < len; ++i)
      if (v[i] < cap) open.push_back(i);
    v[open[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(open.size()) - 1))]] += 1;
  }
  return v;
}

std::optional<IntVector> with_sum(std::mt19937_64& rng, std::size_t len, std::int64_t total, std::int64_t cap,
                                  bool palindromic) {
  if (!palindromic) return spread(rng, len, total, cap);
  const std::size_t half = len / 2;
  std::int64_t middle = 0;
  if (len % 2 == 1) {
    std::vector<std::int64_t> options;
    for (std::int64_t x = total % 2; x <= std::min(cap, total); x += 2)
      if ((total - x) / 2 <= static_cast<std::int64_t>(half) * cap) options.push_back(x);
    if (options.empty()) return std::nullopt;
    middle = options[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(options.size()) - 1))];
  } else if (total % 2 != 0) {
    return std::nullopt;
  }
  const auto top = spread(rng, half, (total - middle) / 2, cap);
  if (!top) return std::nullopt;
  IntVector v(len, 0);
  for (std::size_t i = 0; i < half; ++i) v[i] = v[len - 1 - i] = (*top)[i];
  if (len % 2 == 1) v[half] = middle;
  return v;
}

bool rows_palindromic(SubgroupId h) {
  switch (h) {
    case SubgroupId::HalfTurn:
    case SubgroupId::Horizontal:
    case SubgroupId::Plus:
    case SubgroupId::Cross:
    case SubgroupId::QuarterTurn:
    case SubgroupId::Full: return true;
    default: return false;
  }
}

bool cols_palindromic(SubgroupId h) {
  return h == SubgroupId::HalfTurn || h == SubgroupId::Vertical || h == SubgroupId::Plus;
}

MarginPair from_matrix(const DenseMatrix& a) {
  return MarginPair(MarginVector(a.row_sums()), MarginVector(a.col_sums()));
}

}  // namespace

DenseMatrix random_invariant_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, SubgroupId h, MatrixClass c,
                                    std::int64_t max_entry) {
  DenseMatrix a(m, n);
  for (const auto& orbit : cell_orbits(h, m, n)) {
    Scalar v;
    if (c == MatrixClass::ZeroOne) {
      v = draw(rng, 0, 1);
    } else if (c == MatrixClass::Integral) {
      v = draw(rng, 0, max_entry);
    } else {
      const std::int64_t q = draw(rng, 1, 4);
      v = Scalar(draw(rng, 0, max_entry * q), q);
    }
    for (const auto& [i, j] : orbit) a(i, j) = v;
  }
  return a;
}

MarginPair instance(const Options& opt) {
  std::mt19937_64 rng(opt.seed);
  const SubgroupId h = opt.subgroup;
  const bool tied = requires_square(h) || h == SubgroupId::Cross;
  const auto m = static_cast<std::size_t>(draw(rng, 1, static_cast<std::int64_t>(std::max<std::size_t>(1, opt.max_m))));
  const auto n = tied ? m : static_cast<std::size_t>(draw(rng, 1, static_cast<std::int64_t>(std::max<std::size_t>(1, opt.max_n))));
  const std::int64_t entry = opt.matrix_class == MatrixClass::ZeroOne ? 1 : std::max<std::int64_t>(1, opt.max_entry);

  if (unit(rng) < opt.feasible_bias) {
    return from_matrix(random_invariant_matrix(rng, m, n, h, opt.matrix_class, entry));
  }

  const std::int64_t row_cap = entry * static_cast<std::int64_t>(n);
  const std::int64_t col_cap = entry * static_cast<std::int64_t>(m);
  const std::int64_t limit = std::min(row_cap * static_cast<std::int64_t>(m), col_cap * static_cast<std::int64_t>(n));
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::int64_t total = draw(rng, 0, limit);
    const auto r = with_sum(rng, m, total, row_cap, rows_palindromic(h));
    if (!r) continue;
    std::optional<IntVector> s;
    if (h == SubgroupId::Diagonal || h == SubgroupId::Cross || h == SubgroupId::QuarterTurn || h == SubgroupId::Full) {
      s = *r;
    } else if (h == SubgroupId::AntiDiagonal) {
      s = reverse(*r);
    } else {
      s = with_sum(rng, n, total, col_cap, cols_palindromic(h));
    }
    if (!s) continue;
    return MarginPair(MarginVector::from_integers(*r), MarginVector::from_integers(*s));
  }
  return from_matrix(random_invariant_matrix(rng, m, n, h, opt.matrix_class, entry));
}

}  // namespace dihedral::generate

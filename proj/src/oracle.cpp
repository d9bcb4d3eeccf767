#include "dihedral/oracle.hpp"

#include "detail.hpp"
#include "dihedral/transport.hpp"
#include "dihedral/zeroone.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <tuple>

namespace dihedral::oracle {

namespace {

struct Touch {
  std::size_t index;
  std::int64_t count;
};

// Depth-first search over orbit values with margin pruning.
class OrbitSearch {
 public:
  OrbitSearch(const IntVector& rows, const IntVector& cols, std::vector<std::vector<Cell>> orbits, std::int64_t bound)
      : m_(rows.size()), n_(cols.size()), bound_(bound), orbits_(std::move(orbits)), row_left_(rows), col_left_(cols) {
    const std::size_t k = orbits_.size();
    row_touch_.resize(k);
    col_touch_.resize(k);
    row_room_.assign(k + 1, std::vector<std::int64_t>(m_, 0));
    col_room_.assign(k + 1, std::vector<std::int64_t>(n_, 0));
    for (std::size_t t = 0; t < k; ++t) {
      std::vector<std::int64_t> rc(m_, 0), cc(n_, 0);
      for (const auto& [i, j] : orbits_[t]) {
        ++rc[i];
        ++cc[j];
      }
      for (std::size_t i = 0; i < m_; ++i)
        if (rc[i]) row_touch_[t].push_back({i, rc[i]});
      for (std::size_t j = 0; j < n_; ++j)
        if (cc[j]) col_touch_[t].push_back({j, cc[j]});
    }
    for (std::size_t t = k; t-- > 0;) {
      row_room_[t] = row_room_[t + 1];
      col_room_[t] = col_room_[t + 1];
      for (const auto& r : row_touch_[t]) row_room_[t][r.index] += r.count * bound_;
      for (const auto& c : col_touch_[t]) col_room_[t][c.index] += c.count * bound_;
    }
    values_.assign(k, 0);
  }

  std::optional<IntMatrix> run() {
    for (std::size_t i = 0; i < m_; ++i)
      if (row_left_[i] < 0 || row_left_[i] > row_room_[0][i]) return std::nullopt;
    for (std::size_t j = 0; j < n_; ++j)
      if (col_left_[j] < 0 || col_left_[j] > col_room_[0][j]) return std::nullopt;
    if (!dfs(0)) return std::nullopt;
    IntMatrix a(m_, n_);
    for (std::size_t t = 0; t < orbits_.size(); ++t)
      for (const auto& [i, j] : orbits_[t]) a(i, j) = values_[t];
    return a;
  }

 private:
  bool dfs(std::size_t t) {
    if (t == orbits_.size()) return true;
    std::int64_t hi = bound_;
    for (const auto& r : row_touch_[t]) hi = std::min(hi, row_left_[r.index] / r.count);
    for (const auto& c : col_touch_[t]) hi = std::min(hi, col_left_[c.index] / c.count);
    for (std::int64_t v = 0; v <= hi; ++v) {
      bool ok = true;
      for (const auto& r : row_touch_[t]) {
        row_left_[r.index] -= v * r.count;
        if (row_left_[r.index] > row_room_[t + 1][r.index]) ok = false;
      }
      for (const auto& c : col_touch_[t]) {
        col_left_[c.index] -= v * c.count;
        if (col_left_[c.index] > col_room_[t + 1][c.index]) ok = false;
      }
      values_[t] = v;
      if (ok && dfs(t + 1)) return true;
      for (const auto& r : row_touch_[t]) row_left_[r.index] += v * r.count;
      for (const auto& c : col_touch_[t]) col_left_[c.index] += v * c.count;
    }
    values_[t] = 0;
    return false;
  }

  std::size_t m_, n_;
  std::int64_t bound_;
  std::vector<std::vector<Cell>> orbits_;
  IntVector row_left_, col_left_;
  std::vector<std::vector<Touch>> row_touch_, col_touch_;
  std::vector<std::vector<std::int64_t>> row_room_, col_room_;
  std::vector<std::int64_t> values_;
};

std::int64_t max_entry(const IntVector& v) { return v.empty() ? 0 : *std::max_element(v.begin(), v.end()); }

std::string decision_word(bool feasible) { return feasible ? "feasible" : "infeasible"; }

struct Task {
  std::size_t pair;
  SubgroupId h;
  MatrixClass c;
};

std::vector<Discrepancy> check(const MarginPair& p, const IntVector& r, const IntVector& s, SubgroupId h,
                               MatrixClass c, const SweepConfig& cfg) {
  std::vector<Discrepancy> out;
  const std::string instance = "R=" + detail::show(r) + " S=" + detail::show(s);
  auto record = [&](std::string theorem, std::string oracle_side) {
    out.push_back(Discrepancy{instance, h, c, std::move(theorem), std::move(oracle_side)});
  };

  FeasibilityReport report;
  try {
    report = c == MatrixClass::ZeroOne ? zeroone::feasible01(p, h) : transport::feasible(p, h, c);
  } catch (const std::logic_error& e) {
    record(std::string("witness-failed: ") + e.what(), "-");
    return out;
  }
  bool decision = report.feasible;
  if (cfg.inject_fault && p.m() == 1 && p.n() == 1) decision = !decision;

  if (report.feasible) {
    if (!report.witness) {
      record("feasible without witness", "-");
    } else if (!verify(*report.witness, p, h, c).passed()) {
      record("witness-failed", "-");
    }
  }

  if (c == MatrixClass::Real) return out;

  const std::int64_t total = sum(r);
  const std::int64_t bound = c == MatrixClass::ZeroOne ? 1 : (cfg.entry_bound >= 0 ? cfg.entry_bound : total);
  const bool truth = enumerate(r, s, h, bound).has_value();
  if (truth != decision) record(decision_word(decision), decision_word(truth));

  if (c == MatrixClass::Integral && decision && !transport::feasible(p, h, MatrixClass::Real).feasible) {
    record("integral feasible, real infeasible", decision_word(truth));
  }
  return out;
}

}  // namespace

std::optional<IntMatrix> enumerate(const IntVector& rows, const IntVector& cols, SubgroupId h,
                                   std::int64_t entry_bound) {
  if (requires_square(h) && rows.size() != cols.size()) {
    throw Error(ErrorKind::Shape, "subgroup " + std::string(name(h)) + " needs a square grid");
  }
  if (sum(rows) != sum(cols)) return std::nullopt;
  return OrbitSearch(rows, cols, cell_orbits(h, rows.size(), cols.size()), entry_bound).run();
}

std::optional<DenseMatrix> enumerate(const MarginPair& p, SubgroupId h, MatrixClass c, std::int64_t entry_bound) {
  if (c == MatrixClass::Real) throw Error(ErrorKind::Argument, "the real class cannot be enumerated");
  if (!p.is_integral()) throw Error(ErrorKind::NotIntegral, "enumeration needs integer margins");
  const IntVector r = p.rows().integers(), s = p.cols().integers();
  std::int64_t bound = entry_bound >= 0 ? entry_bound : std::min(max_entry(r), max_entry(s));
  if (c == MatrixClass::ZeroOne) bound = std::min<std::int64_t>(bound, 1);
  const auto found = enumerate(r, s, h, bound);
  if (!found) return std::nullopt;
  return to_dense(*found);
}

bool exists_unrestricted(const IntVector& rows, const IntVector& cols, SubgroupId h, std::int64_t entry_bound) {
  if (requires_square(h) && rows.size() != cols.size()) return false;
  if (sum(rows) != sum(cols)) return false;
  // Walk every matrix with the right margins; the first invariant one wins.
  const std::size_t m = rows.size(), n = cols.size();
  IntMatrix a(m, n);
  IntVector row_left = rows, col_left = cols;
  std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
    if (k == m * n) {
      for (auto x : row_left)
        if (x != 0) return false;
      for (auto x : col_left)
        if (x != 0) return false;
      return is_invariant(a, h);
    }
    const std::size_t i = k / n, j = k % n;
    const std::int64_t hi = std::min({entry_bound, row_left[i], col_left[j]});
    for (std::int64_t v = 0; v <= hi; ++v) {
      a(i, j) = v;
      row_left[i] -= v;
      col_left[j] -= v;
      const bool row_done = j + 1 < n || row_left[i] == 0;
      const bool col_done = i + 1 < m || col_left[j] == 0;
      const bool ok = row_done && col_done && dfs(k + 1);
      row_left[i] += v;
      col_left[j] += v;
      if (ok) return true;
    }
    a(i, j) = 0;
    return false;
  };
  return dfs(0);
}

bool symmetric_012_exists(const IntVector& r) {
  for (auto x : r)
    if (x < 0) return false;
  return enumerate(r, r, SubgroupId::Diagonal, 2).has_value();
}

bool symmetric_012_all_subsets(const IntVector& r) {
  const std::size_t n = r.size();
  const std::int64_t total = sum(r);
  for (std::size_t im = 0; im < (std::size_t{1} << n); ++im) {
    std::int64_t in_i = 0;
    std::int64_t size_i = 0;
    for (std::size_t t = 0; t < n; ++t)
      if (im >> t & 1) {
        in_i += r[t];
        ++size_i;
      }
    for (std::size_t jm = 0; jm < (std::size_t{1} << n); ++jm) {
      std::int64_t in_j = 0;
      std::int64_t size_j = 0;
      for (std::size_t t = 0; t < n; ++t)
        if (jm >> t & 1) {
          in_j += r[t];
          ++size_j;
        }
      if (2 * size_i * size_j < in_i - (total - in_j)) return false;
    }
  }
  return true;
}

std::vector<IntVector> compositions(std::size_t length, std::int64_t total, std::int64_t cap) {
  std::vector<IntVector> out;
  if (total < 0) return out;
  IntVector v(length, 0);
  std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t k, std::int64_t left) {
    if (k + 1 >= length) {
      if (length == 0) {
        if (left == 0) out.push_back(v);
        return;
      }
      if (left <= cap) {
        v[k] = left;
        out.push_back(v);
      }
      return;
    }
    for (std::int64_t x = 0; x <= std::min(cap, left); ++x) {
      v[k] = x;
      fill(k + 1, left - x);
    }
  };
  fill(0, total);
  return out;
}

std::string Discrepancy::to_string() const {
  return instance + ", " + std::string(name(subgroup)) + ", " + std::string(name(matrix_class)) + ", " +
         theorem_decision + ", " + oracle_decision;
}

SweepResult sweep(const SweepConfig& cfg) {
  std::vector<std::pair<IntVector, IntVector>> pairs;
  std::vector<Task> tasks;
  for (MatrixClass c : cfg.classes) {
    for (std::size_t m = 1; m <= cfg.max_m; ++m) {
      for (std::size_t n = 1; n <= cfg.max_n; ++n) {
        std::vector<SubgroupId> hs;
        for (SubgroupId h : cfg.subgroups)
          if (!requires_square(h) || m == n) hs.push_back(h);
        if (hs.empty()) continue;
        for (std::int64_t total = 0; total <= cfg.max_total; ++total) {
          const bool zo = c == MatrixClass::ZeroOne;
          const auto rows = compositions(m, total, zo ? static_cast<std::int64_t>(n) : total);
          const auto cols = compositions(n, total, zo ? static_cast<std::int64_t>(m) : total);
          for (const auto& r : rows) {
            for (const auto& s : cols) {
              pairs.emplace_back(r, s);
              for (SubgroupId h : hs) tasks.push_back({pairs.size() - 1, h, c});
            }
          }
        }
      }
    }
  }

  const std::size_t jobs = std::max<std::size_t>(1, cfg.jobs);
  std::vector<std::vector<Discrepancy>> found(jobs);
  auto worker = [&](std::size_t w) {
    for (std::size_t k = w; k < tasks.size(); k += jobs) {
      const auto& [r, s] = pairs[tasks[k].pair];
      const MarginPair p(MarginVector::from_integers(r), MarginVector::from_integers(s));
      auto d = check(p, r, s, tasks[k].h, tasks[k].c, cfg);
      found[w].insert(found[w].end(), d.begin(), d.end());
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }

  SweepResult result;
  result.checked = tasks.size();
  for (auto& part : found) result.discrepancies.insert(result.discrepancies.end(), part.begin(), part.end());
  std::sort(result.discrepancies.begin(), result.discrepancies.end(), [](const Discrepancy& a, const Discrepancy& b) {
    return std::tuple(a.instance, name(a.subgroup), name(a.matrix_class), a.theorem_decision) <
           std::tuple(b.instance, name(b.subgroup), name(b.matrix_class), b.theorem_decision);
  });
  return result;
}

}  // namespace dihedral::oracle

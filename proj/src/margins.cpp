#include "dihedral/margins.hpp"

#include "dihedral/errors.hpp"

namespace dihedral {

MarginVector::MarginVector(std::vector<Scalar> entries) : entries_(std::move(entries)) {
  for (const auto& x : entries_) {
    if (x < 0) {
      throw Error(ErrorKind::Bounds, "margin entries must be nonnegative, got " + format_scalar(x));
    }
  }
}

MarginVector::MarginVector(std::initializer_list<std::int64_t> entries)
    : MarginVector(std::vector<Scalar>(entries.begin(), entries.end())) {}

MarginVector MarginVector::from_integers(const IntVector& entries) {
  return MarginVector(std::vector<Scalar>(entries.begin(), entries.end()));
}

MarginVector MarginVector::parse(std::string_view text) {
  std::vector<Scalar> entries;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) {
    return MarginVector();
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    entries.push_back(parse_scalar(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return MarginVector(std::move(entries));
}

Scalar MarginVector::total() const {
  Scalar t = 0;
  for (const auto& x : entries_) t += x;
  return t;
}

bool MarginVector::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& x) { return is_integer(x); });
}

IntVector MarginVector::integers() const {
  IntVector out;
  out.reserve(entries_.size());
  for (const auto& x : entries_) out.push_back(to_int64(x));
  return out;
}

std::string MarginVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += format_scalar(entries_[i]);
  }
  return out;
}

MarginPair::MarginPair(MarginVector rows, MarginVector cols)
    : rows_(std::move(rows)), cols_(std::move(cols)), total_(rows_.total()) {
  if (total_ != cols_.total()) {
    throw Error(ErrorKind::SumMismatch, "row total " + format_scalar(total_) + " differs from column total " +
                                            format_scalar(cols_.total()));
  }
}

bool MarginPair::within_zero_one_bounds() const {
  const Scalar m = static_cast<std::int64_t>(rows_.size());
  const Scalar n = static_cast<std::int64_t>(cols_.size());
  return std::all_of(rows_.entries().begin(), rows_.entries().end(), [&](const Scalar& r) { return r <= n; }) &&
         std::all_of(cols_.entries().begin(), cols_.entries().end(), [&](const Scalar& s) { return s <= m; });
}

MirrorPermutation MirrorPermutation::identity(std::size_t n) {
  MirrorPermutation p;
  p.source_.resize(n);
  std::iota(p.source_.begin(), p.source_.end(), std::size_t{0});
  return p;
}

MirrorPermutation MirrorPermutation::from_upper_half(std::size_t n, const std::vector<std::size_t>& upper) {
  if (upper.size() != lower_half(n)) {
    throw Error(ErrorKind::Argument, "mirror permutation needs exactly floor(n/2) upper entries");
  }
  MirrorPermutation p = identity(n);
  std::vector<bool> seen(upper.size(), false);
  for (std::size_t k = 0; k < upper.size(); ++k) {
    if (upper[k] >= upper.size() || seen[upper[k]]) {
      throw Error(ErrorKind::Argument, "upper half is not a permutation");
    }
    seen[upper[k]] = true;
    p.source_[k] = upper[k];
    p.source_[n - 1 - k] = n - 1 - upper[k];
  }
  return p;
}

bool MirrorPermutation::is_identity() const {
  for (std::size_t k = 0; k < source_.size(); ++k) {
    if (source_[k] != k) return false;
  }
  return true;
}

MirrorPermutation MirrorPermutation::inverse() const {
  MirrorPermutation p;
  p.source_.resize(source_.size());
  for (std::size_t k = 0; k < source_.size(); ++k) p.source_[source_[k]] = k;
  return p;
}

MarginVector decreasing_rearrangement(const MarginVector& v) {
  return MarginVector(decreasing_rearrangement(v.entries()));
}

MarginVector reverse(const MarginVector& v) { return MarginVector(reverse(v.entries())); }

bool is_palindromic(const MarginVector& v) { return is_palindromic(v.entries()); }

bool majorizes(const MarginVector& a, const MarginVector& b) { return majorizes(a.entries(), b.entries()); }

IntVector conjugate(const IntVector& v) {
  std::int64_t top = 0;
  for (auto x : v) {
    if (x < 0) throw Error(ErrorKind::Bounds, "conjugate of a vector with negative entries");
    top = std::max(top, x);
  }
  IntVector out(static_cast<std::size_t>(top), 0);
  for (auto x : v) {
    for (std::int64_t k = 0; k < x; ++k) ++out[static_cast<std::size_t>(k)];
  }
  return out;
}

MarginVector conjugate(const MarginVector& v) { return MarginVector::from_integers(conjugate(v.integers())); }

std::size_t odd_count(const IntVector& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](std::int64_t x) { return x % 2 != 0; }));
}

std::size_t odd_count(const MarginVector& v) { return odd_count(v.integers()); }

IntVector::value_type sum(const IntVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

namespace {

template <typename T>
std::pair<std::vector<T>, MirrorPermutation> normalize_impl(const std::vector<T>& v) {
  if (!is_palindromic(v)) {
    throw Error(ErrorKind::Argument, "normalization requires a palindromic vector");
  }
  const std::size_t half = lower_half(v.size());
  std::vector<std::size_t> upper(half);
  std::iota(upper.begin(), upper.end(), std::size_t{0});
  std::stable_sort(upper.begin(), upper.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  auto sigma = MirrorPermutation::from_upper_half(v.size(), upper);
  return {sigma.apply(v), std::move(sigma)};
}

}  // namespace

std::pair<IntVector, MirrorPermutation> normalize_initially_nonincreasing(const IntVector& v) {
  return normalize_impl(v);
}

std::pair<MarginVector, MirrorPermutation> normalize_initially_nonincreasing(const MarginVector& v) {
  auto [w, sigma] = normalize_impl(v.entries());
  return {MarginVector(std::move(w)), std::move(sigma)};
}

}  // namespace dihedral

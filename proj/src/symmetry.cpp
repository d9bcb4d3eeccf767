#include "dihedral/symmetry.hpp"

#include <algorithm>
#include <set>

namespace dihedral {

namespace {

// Every element is rot^k after an optional flip about the slope-0 axis.
struct Word {
  int turns;
  bool flipped;
};

Word word(Symmetry g) {
  switch (g) {
    case Symmetry::Rot0: return {0, false};
    case Symmetry::Rot90: return {1, false};
    case Symmetry::Rot180: return {2, false};
    case Symmetry::Rot270: return {3, false};
    case Symmetry::ReflH: return {0, true};
    case Symmetry::ReflA: return {1, true};
    case Symmetry::ReflV: return {2, true};
    case Symmetry::ReflD: return {3, true};
  }
  return {0, false};
}

Symmetry from_word(Word w) {
  const int k = ((w.turns % 4) + 4) % 4;
  static constexpr Symmetry rotations[] = {Symmetry::Rot0, Symmetry::Rot90, Symmetry::Rot180, Symmetry::Rot270};
  static constexpr Symmetry flips[] = {Symmetry::ReflH, Symmetry::ReflA, Symmetry::ReflV, Symmetry::ReflD};
  return w.flipped ? flips[k] : rotations[k];
}

using S = Symmetry;
constexpr S kTrivial[] = {S::Rot0};
constexpr S kQuarter[] = {S::Rot0, S::Rot90, S::Rot180, S::Rot270};
constexpr S kHalf[] = {S::Rot0, S::Rot180};
constexpr S kHorizontal[] = {S::Rot0, S::ReflH};
constexpr S kAnti[] = {S::Rot0, S::ReflA};
constexpr S kDiag[] = {S::Rot0, S::ReflD};
constexpr S kVertical[] = {S::Rot0, S::ReflV};
constexpr S kCross[] = {S::Rot0, S::Rot180, S::ReflA, S::ReflD};
constexpr S kPlus[] = {S::Rot0, S::Rot180, S::ReflH, S::ReflV};
constexpr S kFull[] = {S::Rot0, S::Rot90, S::Rot180, S::Rot270, S::ReflH, S::ReflV, S::ReflD, S::ReflA};

constexpr S kGenQuarter[] = {S::Rot90};
constexpr S kGenHalf[] = {S::Rot180};
constexpr S kGenHorizontal[] = {S::ReflH};
constexpr S kGenAnti[] = {S::ReflA};
constexpr S kGenDiag[] = {S::ReflD};
constexpr S kGenVertical[] = {S::ReflV};
constexpr S kGenCross[] = {S::ReflD, S::ReflA};
constexpr S kGenPlus[] = {S::ReflH, S::ReflV};
constexpr S kGenFull[] = {S::Rot90, S::ReflV};

}  // namespace

std::string_view name(Symmetry g) {
  switch (g) {
    case Symmetry::Rot0: return "rot0";
    case Symmetry::Rot90: return "rot90";
    case Symmetry::Rot180: return "rot180";
    case Symmetry::Rot270: return "rot270";
    case Symmetry::ReflH: return "refl_h";
    case Symmetry::ReflV: return "refl_v";
    case Symmetry::ReflD: return "refl_d";
    case Symmetry::ReflA: return "refl_a";
  }
  return "?";
}

std::string_view name(SubgroupId h) {
  switch (h) {
    case SubgroupId::Trivial: return "trivial";
    case SubgroupId::QuarterTurn: return "rot90";
    case SubgroupId::HalfTurn: return "rot180";
    case SubgroupId::Horizontal: return "h";
    case SubgroupId::Vertical: return "v";
    case SubgroupId::Diagonal: return "diag";
    case SubgroupId::AntiDiagonal: return "antidiag";
    case SubgroupId::Cross: return "times";
    case SubgroupId::Plus: return "plus";
    case SubgroupId::Full: return "full";
  }
  return "?";
}

std::optional<SubgroupId> parse_subgroup(std::string_view text) {
  for (SubgroupId h : kAllSubgroups) {
    if (name(h) == text) return h;
  }
  return std::nullopt;
}

Symmetry compose(Symmetry g, Symmetry h) {
  const Word a = word(g), b = word(h);
  // rot^a s^f rot^b s^e = rot^(a +- b) s^(f xor e), since s rot s = rot^-1.
  return from_word({a.turns + (a.flipped ? -b.turns : b.turns), a.flipped != b.flipped});
}

Symmetry inverse(Symmetry g) {
  const Word w = word(g);
  return w.flipped ? g : from_word({-w.turns, false});
}

bool swaps_dimensions(Symmetry g) {
  return g == Symmetry::Rot90 || g == Symmetry::Rot270 || g == Symmetry::ReflD || g == Symmetry::ReflA;
}

std::pair<std::size_t, std::size_t> source_cell(Symmetry g, std::size_t i, std::size_t j, std::size_t m,
                                                std::size_t n) {
  switch (g) {
    case Symmetry::Rot0: return {i, j};
    case Symmetry::Rot90: return {j, n - 1 - i};
    case Symmetry::Rot180: return {m - 1 - i, n - 1 - j};
    case Symmetry::Rot270: return {m - 1 - j, i};
    case Symmetry::ReflH: return {m - 1 - i, j};
    case Symmetry::ReflV: return {i, n - 1 - j};
    case Symmetry::ReflD: return {j, i};
    case Symmetry::ReflA: return {m - 1 - j, n - 1 - i};
  }
  return {i, j};
}

std::span<const Symmetry> elements(SubgroupId h) {
  switch (h) {
    case SubgroupId::Trivial: return kTrivial;
    case SubgroupId::QuarterTurn: return kQuarter;
    case SubgroupId::HalfTurn: return kHalf;
    case SubgroupId::Horizontal: return kHorizontal;
    case SubgroupId::AntiDiagonal: return kAnti;
    case SubgroupId::Diagonal: return kDiag;
    case SubgroupId::Vertical: return kVertical;
    case SubgroupId::Cross: return kCross;
    case SubgroupId::Plus: return kPlus;
    case SubgroupId::Full: return kFull;
  }
  return kTrivial;
}

std::span<const Symmetry> generators(SubgroupId h) {
  switch (h) {
    case SubgroupId::Trivial: return {};
    case SubgroupId::QuarterTurn: return kGenQuarter;
    case SubgroupId::HalfTurn: return kGenHalf;
    case SubgroupId::Horizontal: return kGenHorizontal;
    case SubgroupId::AntiDiagonal: return kGenAnti;
    case SubgroupId::Diagonal: return kGenDiag;
    case SubgroupId::Vertical: return kGenVertical;
    case SubgroupId::Cross: return kGenCross;
    case SubgroupId::Plus: return kGenPlus;
    case SubgroupId::Full: return kGenFull;
  }
  return {};
}

bool requires_square(SubgroupId h) {
  const auto els = elements(h);
  return std::any_of(els.begin(), els.end(), swaps_dimensions);
}

std::vector<std::vector<Cell>> cell_orbits(SubgroupId h, std::size_t m, std::size_t n) {
  std::vector<std::vector<Cell>> orbits;
  std::vector<bool> seen(m * n, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[i * n + j]) continue;
      std::set<Cell> orbit;
      for (Symmetry g : elements(h)) orbit.insert(source_cell(g, i, j, m, n));
      for (const auto& [a, b] : orbit) seen[a * n + b] = true;
      orbits.emplace_back(orbit.begin(), orbit.end());
    }
  }
  return orbits;
}

}  // namespace dihedral

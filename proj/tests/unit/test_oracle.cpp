#include "dihedral/errors.hpp"
#include "dihedral/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace dihedral;
using namespace testing_support;

namespace {

IntMatrix m0() { return {{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}}; }

}  // namespace

TEST(Verify, Examples) {
  const auto cross = to_dense(IntMatrix{{1, 0, 1}, {0, 1, 0}, {1, 0, 1}});
  EXPECT_TRUE(oracle::verify(cross, MarginPair({2, 1, 2}, {2, 1, 2}), SubgroupId::Full, MatrixClass::ZeroOne).passed());

  const auto m = to_dense(m0());
  const auto r = oracle::verify(m, margins_of(m), SubgroupId::Cross, MatrixClass::ZeroOne);
  EXPECT_FALSE(r.invariant_ok);
  EXPECT_TRUE(r.margins_ok);
  EXPECT_TRUE(oracle::verify(m, margins_of(m), SubgroupId::HalfTurn, MatrixClass::ZeroOne).passed());

  const auto zero = oracle::verify(DenseMatrix(2, 2), MarginPair({1, 1}, {1, 1}), SubgroupId::Trivial,
                                   MatrixClass::Integral);
  EXPECT_FALSE(zero.margins_ok);
  EXPECT_EQ(zero.mismatches.size(), 4u);
}

TEST(Verify, DomainAndShape) {
  DenseMatrix half(1, 1);
  half(0, 0) = Scalar(1, 2);
  const MarginPair p(MarginVector::parse("1/2"), MarginVector::parse("1/2"));
  EXPECT_TRUE(oracle::verify(half, p, SubgroupId::Trivial, MatrixClass::Real).passed());
  EXPECT_FALSE(oracle::verify(half, p, SubgroupId::Trivial, MatrixClass::Integral).domain_ok);
  const auto two = to_dense(IntMatrix{{2}});
  EXPECT_FALSE(oracle::verify(two, MarginPair({2}, {2}), SubgroupId::Trivial, MatrixClass::ZeroOne).domain_ok);
  DenseMatrix negative(1, 2);
  negative(0, 0) = -1;
  negative(0, 1) = 1;
  EXPECT_FALSE(oracle::verify(negative, MarginPair({0}, {0, 0}), SubgroupId::Trivial, MatrixClass::Real).passed());
  const auto wide = to_dense(IntMatrix{{1, 1}});
  const auto shape = oracle::verify(wide, MarginPair({2}, {1, 1}), SubgroupId::Full, MatrixClass::Integral);
  EXPECT_FALSE(shape.passed());
  EXPECT_FALSE(shape.invariant_ok);
}

TEST(Enumerate, Examples) {
  EXPECT_FALSE(oracle::enumerate(MarginPair({1, 1}, {1, 0, 1}), SubgroupId::Vertical, MatrixClass::Integral));
  const auto w = oracle::enumerate(MarginPair({1, 1, 1}, {1, 1, 1}), SubgroupId::HalfTurn, MatrixClass::ZeroOne);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(oracle::verify(*w, MarginPair({1, 1, 1}, {1, 1, 1}), SubgroupId::HalfTurn, MatrixClass::ZeroOne).passed());
  EXPECT_FALSE(oracle::enumerate(MarginPair({6, 6, 6, 2, 1, 1}, {4, 4, 2, 2, 2, 4, 4}), SubgroupId::Vertical,
                                 MatrixClass::ZeroOne));
  EXPECT_THROW(oracle::enumerate(MarginPair({1}, {1}), SubgroupId::Trivial, MatrixClass::Real), Error);
}

TEST(Enumerate, AgreesWithUnrestrictedSearch) {
  // Grids with at most 12 cells, every subgroup, entries bounded by 2.
  std::mt19937_64 rng(51);
  for (SubgroupId h : kAllSubgroups) {
    for (int t = 0; t < 60; ++t) {
      std::size_t m = static_cast<std::size_t>(pick(rng, 1, 4));
      std::size_t n = requires_square(h) ? m : static_cast<std::size_t>(pick(rng, 1, 4));
      if (requires_square(h) && m * n > 12) m = n = 3;
      if (m * n > 12) n = 12 / m;
      const IntMatrix a = pick(rng, 0, 1) ? random_invariant(rng, m, n, h, 2) : random_int_matrix(rng, m, n, 2);
      const std::int64_t bound = pick(rng, 1, 2);
      const auto r = a.row_sums(), s = a.col_sums();
      const auto found = oracle::enumerate(r, s, h, bound);
      EXPECT_EQ(found.has_value(), oracle::exists_unrestricted(r, s, h, bound)) << name(h);
      if (found) {
        EXPECT_TRUE(is_invariant_all_elements(*found, h));
        EXPECT_EQ(found->row_sums(), r);
        EXPECT_EQ(found->col_sums(), s);
      }
    }
  }
}

TEST(Symmetric012Oracles, AgreeOnSmallVectors) {
  for (std::int64_t a = 0; a <= 4; ++a)
    for (std::int64_t b = 0; b <= a; ++b)
      for (std::int64_t c = 0; c <= b; ++c) {
        const IntVector r{a, b, c};
        EXPECT_EQ(oracle::symmetric_012_exists(r), oracle::symmetric_012_all_subsets(r));
      }
  EXPECT_FALSE(oracle::symmetric_012_exists(IntVector{4, 0}));
  EXPECT_TRUE(oracle::symmetric_012_exists(IntVector{2, 2}));
}

TEST(Compositions, CountsAndOrder) {
  const auto c = oracle::compositions(3, 2, 2);
  EXPECT_EQ(c.size(), 6u);
  EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
  EXPECT_EQ(oracle::compositions(2, 3, 1).size(), 0u);
  EXPECT_EQ(oracle::compositions(0, 0, 5).size(), 1u);
  EXPECT_EQ(oracle::compositions(0, 1, 5).size(), 0u);
}

TEST(Sweep, SmallZeroOneHasNoDiscrepancies) {
  oracle::SweepConfig cfg;
  cfg.max_m = 3;
  cfg.max_n = 3;
  cfg.max_total = 6;
  cfg.classes = {MatrixClass::ZeroOne};
  const auto result = oracle::sweep(cfg);
  EXPECT_GT(result.checked, 0u);
  EXPECT_TRUE(result.discrepancies.empty());
}

TEST(Sweep, ReflectionSubgroupsIntegral) {
  oracle::SweepConfig cfg;
  cfg.max_m = 4;
  cfg.max_n = 4;
  cfg.max_total = 8;
  cfg.classes = {MatrixClass::Integral};
  cfg.subgroups = {SubgroupId::Vertical, SubgroupId::Horizontal, SubgroupId::Plus};
  EXPECT_TRUE(oracle::sweep(cfg).discrepancies.empty());
}

TEST(Sweep, ReportsInjectedFault) {
  oracle::SweepConfig cfg;
  cfg.max_m = 2;
  cfg.max_n = 2;
  cfg.max_total = 1;
  cfg.inject_fault = true;
  const auto result = oracle::sweep(cfg);
  ASSERT_FALSE(result.discrepancies.empty());
  for (const auto& d : result.discrepancies) {
    EXPECT_EQ(d.instance.find("R=("), 0u);
    EXPECT_EQ(std::count(d.instance.begin(), d.instance.end(), ','), 0) << d.instance;
    EXPECT_NE(d.theorem_decision, d.oracle_decision);
  }
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  oracle::SweepConfig cfg;
  cfg.max_m = 2;
  cfg.max_n = 3;
  cfg.max_total = 4;
  cfg.inject_fault = true;
  auto render = [](const oracle::SweepResult& r) {
    std::string out;
    for (const auto& d : r.discrepancies) out += d.to_string() + "\n";
    return out;
  };
  const auto one = oracle::sweep(cfg);
  cfg.jobs = 3;
  const auto three = oracle::sweep(cfg);
  EXPECT_EQ(one.checked, three.checked);
  EXPECT_EQ(render(one), render(three));
  EXPECT_FALSE(one.discrepancies.empty());
}

TEST(Sweep, EmptyBounds) {
  oracle::SweepConfig cfg;
  cfg.max_m = 0;
  const auto result = oracle::sweep(cfg);
  EXPECT_EQ(result.checked, 0u);
  EXPECT_TRUE(result.discrepancies.empty());
}

#include "dihedral/errors.hpp"
#include "dihedral/oracle.hpp"
#include "dihedral/transport.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace dihedral;
using namespace testing_support;
using dihedral::transport::construct;
using dihedral::transport::feasible;

namespace {

DenseMatrix dense(std::initializer_list<std::initializer_list<std::int64_t>> rows) { return to_dense(IntMatrix(rows)); }

bool holds(const FeasibilityReport& r, std::string_view label) {
  const Condition* c = r.find(label);
  return c && c->holds;
}

}  // namespace

TEST(ProportionalFill, Examples) {
  EXPECT_EQ(transport::proportional_fill(MarginPair({2, 2}, {2, 2})), dense({{1, 1}, {1, 1}}));
  DenseMatrix expected(2, 2);
  expected(0, 0) = expected(0, 1) = Scalar(3, 2);
  expected(1, 0) = expected(1, 1) = Scalar(1, 2);
  EXPECT_EQ(transport::proportional_fill(MarginPair({3, 1}, {2, 2})), expected);
  EXPECT_EQ(transport::proportional_fill(MarginPair({1}, {1})), dense({{1}}));
  EXPECT_EQ(transport::proportional_fill(MarginPair({0, 0}, {0})), dense({{0}, {0}}));
}

TEST(ProportionalFill, ExactOnRandomRationals) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_rational_matrix(rng, static_cast<std::size_t>(pick(rng, 1, 4)),
                                          static_cast<std::size_t>(pick(rng, 1, 4)));
    const auto p = margins_of(a);
    const auto f = transport::proportional_fill(p);
    EXPECT_EQ(MarginVector(f.row_sums()), p.rows());
    EXPECT_EQ(MarginVector(f.col_sums()), p.cols());
  }
}

TEST(GreedyIntegral, Examples) {
  EXPECT_EQ(transport::greedy_integral(MarginPair({2, 1}, {1, 2})), dense({{1, 1}, {0, 1}}));
  EXPECT_EQ(transport::greedy_integral(MarginPair({5}, {5})), dense({{5}}));
  EXPECT_EQ(transport::greedy_integral(MarginPair({2, 2}, {2, 2})), dense({{2, 0}, {0, 2}}));
}

TEST(GreedyIntegral, HitsMarginsOnRandomInstances) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_int_matrix(rng, static_cast<std::size_t>(pick(rng, 1, 5)),
                                     static_cast<std::size_t>(pick(rng, 1, 5)), 4);
    const auto g = transport::greedy_integral(a.row_sums(), a.col_sums());
    EXPECT_EQ(g.row_sums(), a.row_sums());
    EXPECT_EQ(g.col_sums(), a.col_sums());
  }
}

TEST(Markers, Examples) {
  const auto m = transport::marker_matrices(IntVector{1, 2, 3}, IntVector{3, 0, 3});
  EXPECT_EQ(m.rows_marker, (IntMatrix{{0, 1, 0}, {0, 0, 0}, {0, 1, 0}}));
  const auto even = transport::marker_matrices(IntVector{2, 2}, IntVector{1, 2, 1});
  EXPECT_EQ(even.rows_marker, IntMatrix(2, 3));
  const auto one = transport::marker_matrices(IntVector{1}, IntVector{1});
  EXPECT_EQ(one.plus, (IntMatrix{{1}}));
}

TEST(Feasible, DocumentedDecisions) {
  const MarginPair counter({6, 6, 6, 2, 1, 1}, {4, 4, 2, 2, 2, 4, 4});
  EXPECT_TRUE(feasible(counter, SubgroupId::Vertical, MatrixClass::Real).feasible);

  const auto parity = feasible(MarginPair({1, 1}, {1, 0, 1}), SubgroupId::Vertical, MatrixClass::Integral);
  EXPECT_FALSE(parity.feasible);
  EXPECT_FALSE(holds(parity, "Tinfty.b"));
  EXPECT_FALSE(oracle::enumerate(IntVector{1, 1}, IntVector{1, 0, 1}, SubgroupId::Vertical, 2).has_value());

  const auto two = feasible(MarginPair({1, 1}, {1, 1}), SubgroupId::QuarterTurn, MatrixClass::Integral);
  EXPECT_FALSE(two.feasible);
  EXPECT_FALSE(holds(two, "Tpi2.c"));

  const auto three = feasible(MarginPair({1, 2, 1}, {1, 2, 1}), SubgroupId::QuarterTurn, MatrixClass::Integral);
  EXPECT_TRUE(three.feasible);
  EXPECT_TRUE(holds(three, "Tpi2.d"));
}

TEST(Construct, DocumentedWitnesses) {
  const MarginPair p({3, 2, 2, 3}, {3, 2, 2, 3});
  DenseMatrix real(4, 4);
  real(0, 0) = real(0, 3) = real(3, 0) = real(3, 3) = Scalar(3, 2);
  real(1, 1) = real(1, 2) = real(2, 1) = real(2, 2) = 1;
  EXPECT_EQ(construct(p, SubgroupId::Cross, MatrixClass::Real), real);
  EXPECT_EQ(construct(p, SubgroupId::Cross, MatrixClass::Integral),
            dense({{2, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 2}}));
  EXPECT_EQ(construct(MarginPair({1, 2, 1}, {1, 2, 1}), SubgroupId::QuarterTurn, MatrixClass::Integral),
            dense({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
}

TEST(Construct, ThrowsWhenEmpty) {
  try {
    construct(MarginPair({1, 2}, {1, 2}), SubgroupId::AntiDiagonal, MatrixClass::Real);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Infeasible);
  }
}

TEST(Feasible, InputErrors) {
  auto kind_of = [](auto&& call) {
    try {
      call();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Argument;  // unreachable in these cases; makes a failure visible below
  };
  EXPECT_EQ(kind_of([] { feasible(MarginPair({1, 1}, {2}), SubgroupId::Full, MatrixClass::Real); }), ErrorKind::Shape);
  EXPECT_EQ(kind_of([] {
              feasible(MarginPair(MarginVector::parse("1/2,1/2"), MarginVector::parse("1")), SubgroupId::Trivial,
                       MatrixClass::Integral);
            }),
            ErrorKind::NotIntegral);
  EXPECT_THROW(feasible(MarginPair({1}, {1}), SubgroupId::Trivial, MatrixClass::ZeroOne), Error);
}

TEST(Feasible, DegenerateDimensions) {
  for (SubgroupId h : kAllSubgroups) {
    for (MatrixClass c : {MatrixClass::Real, MatrixClass::Integral}) {
      const auto empty = feasible(MarginPair(MarginVector{}, MarginVector{}), h, c);
      EXPECT_TRUE(empty.feasible) << name(h);
      ASSERT_TRUE(empty.witness.has_value());
      EXPECT_EQ(empty.witness->rows(), 0u);
      const auto zero = feasible(MarginPair({0, 0, 0}, {0, 0, 0}), h, c);
      EXPECT_TRUE(zero.feasible) << name(h);
      EXPECT_EQ(*zero.witness, DenseMatrix(3, 3));
    }
  }
  EXPECT_TRUE(feasible(MarginPair({0, 0}, MarginVector{}), SubgroupId::Vertical, MatrixClass::Integral).feasible);
}

TEST(Feasible, AgreesWithEnumerationOnRandomInstances) {
  std::mt19937_64 rng(33);
  for (SubgroupId h : kAllSubgroups) {
    for (int t = 0; t < 150; ++t) {
      const std::size_t m = static_cast<std::size_t>(pick(rng, 1, 5));
      const std::size_t n = requires_square(h) ? m : static_cast<std::size_t>(pick(rng, 1, 5));
      // Half the time an invariant matrix's margins, half the time a plain one.
      const IntMatrix a = pick(rng, 0, 1) ? random_invariant(rng, m, n, h, 3) : random_int_matrix(rng, m, n, 2);
      const auto p = margins_of(a);
      const auto report = feasible(p, h, MatrixClass::Integral);
      const std::int64_t total = sum(a.row_sums());
      EXPECT_EQ(report.feasible, oracle::enumerate(a.row_sums(), a.col_sums(), h, total).has_value())
          << name(h) << " R=" << p.rows().to_string() << " S=" << p.cols().to_string();
      if (report.feasible) {
        EXPECT_TRUE(oracle::verify(*report.witness, p, h, MatrixClass::Integral).passed());
        EXPECT_TRUE(feasible(p, h, MatrixClass::Real).feasible);
      }
    }
  }
}

TEST(Construct, RealWitnessesAreExact) {
  std::mt19937_64 rng(34);
  for (SubgroupId h : kAllSubgroups) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t m = static_cast<std::size_t>(pick(rng, 1, 5));
      const std::size_t n = requires_square(h) ? m : static_cast<std::size_t>(pick(rng, 1, 5));
      const auto seed = random_rational_matrix(rng, m, n);
      DenseMatrix a(m, n);
      for (const auto& orbit : cell_orbits(h, m, n))
        for (const auto& [i, j] : orbit) a(i, j) = seed(orbit.front().first, orbit.front().second);
      const auto p = margins_of(a);
      const auto w = construct(p, h, MatrixClass::Real);
      EXPECT_TRUE(oracle::verify(w, p, h, MatrixClass::Real).passed()) << name(h);
    }
  }
}

#include "dihedral/generate.hpp"
#include "dihedral/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace dihedral;
using namespace testing_support;

namespace {

bool palindromic(const MarginVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != v[v.size() - 1 - i]) return false;
  return true;
}

}  // namespace

TEST(RandomInvariantMatrix, IsInvariantAndInDomain) {
  std::mt19937_64 rng(8);
  for (SubgroupId h : kAllSubgroups)
    for (MatrixClass c : {MatrixClass::Real, MatrixClass::Integral, MatrixClass::ZeroOne})
      for (int t = 0; t < 20; ++t) {
        const std::size_t m = static_cast<std::size_t>(pick(rng, 1, 5));
        const std::size_t n = requires_square(h) ? m : static_cast<std::size_t>(pick(rng, 1, 5));
        const auto a = generate::random_invariant_matrix(rng, m, n, h, c, 3);
        EXPECT_TRUE(oracle::verify(a, margins_of(a), h, c).passed()) << name(h) << " " << name(c);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < n; ++j) EXPECT_LE(a(i, j), Scalar(c == MatrixClass::ZeroOne ? 1 : 3));
      }
}

TEST(Instance, DeterministicPerSeed) {
  generate::Options opt;
  opt.seed = 42;
  opt.subgroup = SubgroupId::Plus;
  const auto a = generate::instance(opt), b = generate::instance(opt);
  EXPECT_EQ(a.rows().to_string(), b.rows().to_string());
  EXPECT_EQ(a.cols().to_string(), b.cols().to_string());
}

TEST(Instance, MeetsStructuralRequirements) {
  for (SubgroupId h : kAllSubgroups)
    for (MatrixClass c : {MatrixClass::Real, MatrixClass::Integral, MatrixClass::ZeroOne})
      for (double bias : {0.0, 1.0})
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
          generate::Options opt;
          opt.seed = seed;
          opt.subgroup = h;
          opt.matrix_class = c;
          opt.feasible_bias = bias;
          const auto p = generate::instance(opt);
          const auto& r = p.rows();
          const auto& s = p.cols();
          EXPECT_EQ(r.total(), s.total());
          EXPECT_LE(r.size(), opt.max_m);
          EXPECT_LE(s.size(), opt.max_n);
          if (requires_square(h)) EXPECT_EQ(r.size(), s.size());
          switch (h) {
            case SubgroupId::HalfTurn:
            case SubgroupId::Plus:
              EXPECT_TRUE(palindromic(r) && palindromic(s));
              break;
            case SubgroupId::Horizontal: EXPECT_TRUE(palindromic(r)); break;
            case SubgroupId::Vertical: EXPECT_TRUE(palindromic(s)); break;
            case SubgroupId::Diagonal: EXPECT_EQ(r.to_string(), s.to_string()); break;
            case SubgroupId::Cross:
            case SubgroupId::QuarterTurn:
            case SubgroupId::Full:
              EXPECT_TRUE(palindromic(r));
              EXPECT_EQ(r.to_string(), s.to_string());
              break;
            case SubgroupId::AntiDiagonal: {
              EXPECT_EQ(reverse(r), s);
              break;
            }
            case SubgroupId::Trivial: break;
          }
          if (c != MatrixClass::Real) {
            EXPECT_NO_THROW(r.integers());
            EXPECT_NO_THROW(s.integers());
          }
          if (c == MatrixClass::ZeroOne) {
            for (std::size_t i = 0; i < r.size(); ++i) EXPECT_LE(r[i], Scalar(static_cast<long>(s.size())));
            for (std::size_t j = 0; j < s.size(); ++j) EXPECT_LE(s[j], Scalar(static_cast<long>(r.size())));
          }
        }
}

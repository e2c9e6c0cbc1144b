#include <gtest/gtest.h>

#include <random>

#include "slzt/sphere.hpp"

namespace slzt::cycle {
namespace {

std::int64_t binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::int64_t c = 1;
  for (int i = 1; i <= b; ++i) c = c * (a - b + i) / i;
  return c;
}

TEST(Smith, KnownInvariants) {
  EXPECT_EQ(smith_invariants({{2, 4}, {6, 8}}), (std::vector<BigInt>{2, 4}));
  EXPECT_EQ(smith_invariants({{0, 0}, {0, 0}}), std::vector<BigInt>{});
  EXPECT_EQ(smith_invariants({{4, 0}, {0, 6}}), (std::vector<BigInt>{2, 12}));
  EXPECT_EQ(smith_invariants({{1, 2, 3}}), (std::vector<BigInt>{1}));
}

TEST(Smith, DivisibilityChainAndDeterminant) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<BigInt>> m(3, std::vector<BigInt>(3));
    for (auto& row : m)
      for (auto& x : row) x = d(rng);
    // 3x3 determinant by cofactors
    const BigInt det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    const auto s = smith_invariants(m);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) EXPECT_EQ(s[i + 1] % s[i], 0);
    if (det != 0) {
      ASSERT_EQ(s.size(), 3u);
      BigInt prod = 1;
      for (const auto& x : s) prod *= x;
      EXPECT_EQ(prod, abs(det));
    } else {
      EXPECT_LT(s.size(), 3u);
    }
  }
}

class SphereByDim : public ::testing::TestWithParam<int> {};

TEST_P(SphereByDim, CellCountsMatchCrossPolytopeCone) {
  const int n = GetParam();
  const int r = n - 1;
  SphereComplex c(n, 12, 1);
  // faces of the cross-polytope boundary: 2^(i+1) C(r, i+1) in dimension i
  for (int d = 0; d <= r; ++d) {
    const std::int64_t sphere = d < r ? (std::int64_t{1} << (d + 1)) * binomial(r, d + 1) : 0;
    const std::int64_t cone = d == 0 ? 1 : (std::int64_t{1} << d) * binomial(r, d);
    EXPECT_EQ(static_cast<std::int64_t>(c.cells(d).size()), sphere + cone) << "d=" << d;
    EXPECT_EQ(static_cast<std::int64_t>(c.sphere_cells(d).size()), sphere);
  }
  EXPECT_EQ(c.cells(r).size(), std::size_t{1} << r);
}

TEST_P(SphereByDim, TopCellsLabelledByAllSubsets) {
  const int n = GetParam();
  SphereComplex c(n, 1, 1);
  std::set<std::vector<int>> labels;
  for (const auto& top : c.cells(n - 1)) labels.insert(c.label(top));
  EXPECT_EQ(labels.size(), std::size_t{1} << (n - 1));
}

TEST_P(SphereByDim, BoundarySquaresToZero) { EXPECT_TRUE(SphereComplex(GetParam(), 3, 2).boundary_squares_to_zero()); }

TEST_P(SphereByDim, SphereHomology) {
  const int n = GetParam();
  SphereComplex c(n, 1, 1);
  for (int d = 0; d <= n - 2; ++d) {
    const auto h = c.reduced_homology(d, true);
    EXPECT_TRUE(h.torsion.empty());
    EXPECT_EQ(h.rank, d == n - 2 ? 1u : 0u) << "d=" << d;
  }
  EXPECT_EQ(c.euler_characteristic(true), n % 2 == 0 ? 2 : 0);
}

TEST_P(SphereByDim, BallIsAcyclic) {
  const int n = GetParam();
  SphereComplex c(n, 1, 1);
  EXPECT_EQ(c.homology(0, false), (HomologyGroup{1, {}}));
  for (int d = 1; d <= n - 1; ++d) EXPECT_EQ(c.homology(d, false), HomologyGroup{}) << "d=" << d;
  EXPECT_EQ(c.euler_characteristic(false), 1);
}

TEST_P(SphereByDim, FundamentalChainBoundsTheSphere) {
  const int n = GetParam();
  SphereComplex c(n, 1, 1);
  const auto signs = c.fundamental_signs();
  ASSERT_EQ(signs.size(), c.cells(n - 1).size());
  const auto bd = c.boundary_of_fundamental_chain();
  const auto& faces = c.cells(n - 2);
  ASSERT_EQ(bd.size(), faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (SphereComplex::on_sphere(faces[i])) EXPECT_EQ(abs(bd[i]), 1);
    else EXPECT_EQ(bd[i], 0);
  }
  EXPECT_TRUE(c.centre_is_interior());
}

INSTANTIATE_TEST_SUITE_P(Dims, SphereByDim, ::testing::Values(2, 3, 4, 5));

TEST(Sphere, TwoDimensionalCase) {
  SphereComplex c(2, 1, 1);
  EXPECT_EQ(c.cells(1).size(), 2u);
  EXPECT_EQ(c.sphere_cells(0).size(), 2u);
  EXPECT_EQ(c.homology(0, true), (HomologyGroup{2, {}}));
}

TEST(Sphere, CircleForThreeByThree) {
  SphereComplex c(3, 1, 1);
  EXPECT_EQ(c.sphere_cells(1).size(), 4u);
  EXPECT_EQ(c.homology(0, true), (HomologyGroup{1, {}}));
  EXPECT_EQ(c.homology(1, true), (HomologyGroup{1, {}}));
}

TEST(Sphere, RejectsBadArguments) {
  EXPECT_THROW(SphereComplex(1, 1, 1), std::invalid_argument);
  EXPECT_THROW(SphereComplex(3, 0, 1), std::invalid_argument);
  EXPECT_THROW(SphereComplex(3, 1, 0), std::invalid_argument);
}

TEST(Homology, ToString) {
  EXPECT_EQ(to_string(HomologyGroup{}), "0");
  EXPECT_EQ(to_string(HomologyGroup{1, {}}), "Z");
  EXPECT_EQ(to_string(HomologyGroup{2, {BigInt(3)}}), "Z^2 + Z/3");
}

}  // namespace
}  // namespace slzt::cycle

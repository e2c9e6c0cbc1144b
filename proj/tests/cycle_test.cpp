#include <gtest/gtest.h>

#include <random>

#include "slzt/cycle.hpp"
#include "test_support.hpp"

namespace slzt::cycle {
namespace {

using L = LaurentSeries;

L series(std::vector<L::Term> terms) { return L::from_terms(std::move(terms), L::kExactFloor); }

UnipotentVector random_unipotent(std::mt19937_64& rng, std::size_t r) {
  UnipotentVector u;
  for (std::size_t i = 0; i < r; ++i) u.coords.push_back(testing::random_series(rng, -1, -3, 4));
  return u;
}

// Rational-coefficient determinant-one block built from elementary moves.
Matrix<Poly> random_rational_sl(std::mt19937_64& rng, std::size_t n, int steps) {
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  auto m = Matrix<Poly>::identity(n);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    auto e = Matrix<Poly>::identity(n);
    e(i, j) = testing::random_poly(rng, 2, false, 4);
    m = m * e;
  }
  return m;
}

TEST(Split, ExponentFilter) {
  UnipotentVector u;
  u.coords.push_back(series({{2, BigRational(1)}, {0, BigRational(3)}, {-1, BigRational(1)}}));
  const auto s = split_unipotent(u);
  EXPECT_EQ(s.poly.coords[0], poly_from_ints({3, 0, 1}));
  EXPECT_EQ(s.small.coords[0], L::monomial(1, -1));
}

TEST(Split, PolynomialInputHasNoResidual) {
  UnipotentVector u;
  u.coords = {L::from_poly(poly_from_ints({1, 2})), L::from_poly(poly_from_ints({0, 0, 5}))};
  for (const auto& c : split_unipotent(u).small.coords) EXPECT_TRUE(c.exact_zero());
}

TEST(Split, AdditiveAndRecomposes) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto u = random_unipotent(rng, 3), v = random_unipotent(rng, 3);
    const auto su = split_unipotent(u), sv = split_unipotent(v), suv = split_unipotent(u + v);
    EXPECT_EQ(suv.poly, su.poly + sv.poly);
    EXPECT_EQ(suv.small, su.small + sv.small);
    // u' u'' = u and u'' u' = u as matrices
    EXPECT_EQ(to_laurent(su.poly.matrix()) * su.small.matrix(), u.matrix());
    EXPECT_EQ(su.small.matrix() * to_laurent(su.poly.matrix()), u.matrix());
    for (const auto& c : su.small.coords)
      if (!c.exact_zero()) EXPECT_LE(c.top(), -1);
  }
}

TEST(Split, RationalFunctionCoordinates) {
  Unipotent<RatFunc> u;
  // (t^3 + 2)/(t - 1) and t/2
  u.coords = {RatFunc(poly_from_ints({2, 0, 0, 1}), poly_from_ints({-1, 1})),
              RatFunc(Poly(std::vector<BigRational>{0, make_rational(1, 2)}))};
  const auto s = split_unipotent(u);
  EXPECT_EQ(s.poly.coords[0], poly_from_ints({1, 1, 1}));
  EXPECT_EQ(s.small.coords[0], RatFunc(Poly(3), poly_from_ints({-1, 1})));
  EXPECT_TRUE(s.small.coords[1].zero());
}

TEST(UnipotentShape, RoundTripAndRejection) {
  std::mt19937_64 rng(22);
  const auto u = random_unipotent(rng, 2);
  EXPECT_EQ(unipotent_of(u.matrix()), u);
  auto m = u.matrix();
  m(1, 0) = L(1);
  EXPECT_THROW(unipotent_of(m), DimensionError);
}

TEST(Ell, DenominatorLcm) {
  PolyUnipotent p;
  p.coords = {Poly(std::vector<BigRational>{make_rational(1, 6)}), Poly(std::vector<BigRational>{0, make_rational(1, 4)})};
  EXPECT_EQ(ell_of_coordinates(p), 12);
}

TEST(Ell, IdentityWordOnIntegralInput) {
  UnipotentVector u;
  u.coords = {L::from_poly(poly_from_ints({1, -3, 2})), series({{1, BigRational(4)}, {-2, make_rational(1, 7)}})};
  EXPECT_EQ(ell_of(Matrix<Poly>::identity(2), u), 1);
}

TEST(Ell, MinimalMultiplier) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_rational_sl(rng, 2, 4);
    UnipotentVector u;
    for (int i = 0; i < 2; ++i) u.coords.push_back(L::from_poly(testing::random_poly(rng, 3, true)));
    const BigInt l = ell_of(a, u);
    ASSERT_GE(l, 1);
    const auto p = split_unipotent(conjugate_by_inverse(inverse(a), u)).poly;
    auto times = [&](const BigInt& k) {
      bool ok = true;
      for (const auto& c : p.coords) ok = ok && is_integral(c * Poly(BigRational(k)));
      return ok;
    };
    EXPECT_TRUE(times(l));
    if (l > 1) {
      EXPECT_FALSE(times(l - 1));
      // no proper divisor works either
      for (BigInt d = 1; d < l; ++d)
        if (l % d == 0) EXPECT_FALSE(times(d)) << d.get_str();
    }
  }
}

TEST(Ell, PowerIdentityOnRandomPairs) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = random_rational_sl(rng, 2, 3);
    const auto a_inv = inverse(a);
    const auto u = random_unipotent(rng, 2);
    const BigInt l = ell_of(a, u);
    const auto A = to_laurent(embed_top_left(a, 3)), A_inv = to_laurent(embed_top_left(a_inv, 3));
    const auto lhs = split_unipotent(unipotent_of(A_inv * power(u.matrix(), l) * A)).poly;
    const auto once = split_unipotent(conjugate_by_inverse(a_inv, u)).poly;
    const auto rhs = power(once.matrix(), l);
    EXPECT_EQ(lhs.matrix(), rhs);
    EXPECT_TRUE(is_integral(rhs));
  }
}

TEST(Translation, ZeroWord) {
  EXPECT_EQ(translation_vector(3, {0}, -120), (TranslationVector{0, 0, 0}));
  EXPECT_EQ(translation_vector(4, {0, 0}, -120), (TranslationVector{0, 0, 0, 0}));
  EXPECT_EQ(translation_vector(2, {}, -120), (TranslationVector{0, 0}));
}

TEST(Translation, RankTwoGenerator) {
  EXPECT_EQ(translation_vector(3, {1}, -120), (TranslationVector{-2, 2, 0}));
  EXPECT_EQ(translation_vector(3, {-2}, -120), (TranslationVector{4, -4, 0}));
}

TEST(Translation, SumsToZeroAndIsAdditive) {
  const torus::EigenSystem sys(3, -160, 1);
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      const auto nu = translation_vector(sys, {a, b});
      std::int64_t sum = 0;
      for (auto x : nu) sum += x;
      EXPECT_EQ(sum, 0);
      EXPECT_EQ(nu.back(), 0);
      const auto e1 = translation_vector(sys, {1, 0}), e2 = translation_vector(sys, {0, 1});
      for (std::size_t j = 0; j < nu.size(); ++j) EXPECT_EQ(nu[j], a * e1[j] + b * e2[j]);
    }
}

TEST(Translation, LatticeRank) {
  for (int n = 3; n <= 4; ++n) {
    std::vector<std::vector<std::int64_t>> vs;
    const torus::EigenSystem sys(n - 1, -160, 1);
    for (long a = -2; a <= 2; ++a) {
      torus::WordExponents m(static_cast<std::size_t>(n - 2), a);
      if (n == 4) m[1] = -a + 1;
      vs.push_back(translation_vector(sys, m));
      m[0] = 1;
      vs.push_back(translation_vector(sys, m));
    }
    EXPECT_EQ(lattice_rank(vs), static_cast<std::size_t>(n - 2)) << "n=" << n;
  }
  EXPECT_EQ(lattice_rank({{0, 0}, {0, 0}}), 0u);
  EXPECT_EQ(lattice_rank({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}), 2u);
}

TEST(Translation, BadArguments) {
  EXPECT_THROW(translation_vector(1, {}, -120), std::invalid_argument);
  EXPECT_THROW(translation_vector(3, {1, 1}, -120), DimensionError);
}

class CycleSetupTest : public ::testing::TestWithParam<int> {
 protected:
  static const CycleSetup& setup(int n) {
    static std::map<int, std::unique_ptr<CycleSetup>> cache;
    auto& slot = cache[n];
    if (!slot) {
      CycleConfig c;
      c.n = n;
      c.k = 2;
      slot = std::make_unique<CycleSetup>(c);
    }
    return *slot;
  }
};

TEST_P(CycleSetupTest, VerticesAndWalls) {
  const auto& s = setup(GetParam());
  const std::size_t r = static_cast<std::size_t>(s.rank());
  EXPECT_EQ(s.y(), DCoords(r, s.y_level()));
  EXPECT_EQ(s.y_level(), s.rank() - 1);
  EXPECT_EQ(s.e(), s.b_power(s.y(), s.k() + 2));
  EXPECT_EQ(s.bke(), s.b_power(s.e(), s.k()));
  EXPECT_EQ(s.wall_levels(), s.bke());
  ASSERT_EQ(s.wall_elements().size(), r);
  // e lies on sigma: below every wall, at height H_e
  for (std::size_t j = 0; j < r; ++j) EXPECT_LE(s.e()[j], s.wall_levels()[j]);
  for (const auto& c : s.sigma_corners()) {
    std::int64_t h = 0;
    for (auto x : c) h += x;
    EXPECT_EQ(h, s.sigma_height());
  }
}

TEST_P(CycleSetupTest, YIsFixedByIntegralRadical) {
  const auto& s = setup(GetParam());
  const auto n = static_cast<std::size_t>(s.n());
  const auto v = s.vertex(s.y());
  for (std::size_t i = 1; i < n; ++i) {
    EXPECT_TRUE(building::fixes_vertex(building::elementary<L>(n, i, n, L(1)), v));
    EXPECT_TRUE(building::fixes_vertex(building::elementary<L>(n, i, n, L::monomial(make_rational(-2, 3), -4)), v));
  }
  if (s.y_level() > 0) {
    const auto below = s.vertex(DCoords(n - 1, s.y_level() - 1));
    bool all = true;
    for (std::size_t i = 1; i < n; ++i) all = all && building::fixes_vertex(building::elementary<L>(n, i, n, L(1)), below);
    EXPECT_FALSE(all);
  }
}

TEST_P(CycleSetupTest, VertexBasisIsInvertible) {
  const auto& s = setup(GetParam());
  const auto v = s.vertex(s.e());
  const auto prod = v.basis() * v.basis_inverse();
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j)
      EXPECT_TRUE(prod(i, j).agrees_with(L(i == j ? 1 : 0))) << i << "," << j;
}

TEST_P(CycleSetupTest, WallsPassThroughBke) {
  const auto& s = setup(GetParam());
  for (int j = 1; j <= s.rank(); ++j) {
    const auto w = check_wall(s, j);
    EXPECT_TRUE(w.fixes_bke);
    EXPECT_FALSE(w.fixes_previous);
    EXPECT_FALSE(w.fixes_y);
    EXPECT_TRUE(w.power_same_wall);
    // b contracts R_u(P) toward the e side, so the next vertex is also fixed.
    EXPECT_TRUE(w.fixes_next);
  }
}

TEST_P(CycleSetupTest, DomainContainsIdentityAndEllIsProduct) {
  const auto& s = setup(GetParam());
  const torus::WordExponents zero(static_cast<std::size_t>(std::max(s.n() - 2, 0)), 0);
  EXPECT_NE(std::find(s.domain_words().begin(), s.domain_words().end(), zero), s.domain_words().end());
  BigInt prod = 1;
  for (const auto& f : s.ell_factors()) {
    EXPECT_GE(f.value, 1);
    prod *= f.value;
  }
  EXPECT_EQ(prod, s.ell());
  EXPECT_EQ(s.ell_factors().size(), s.domain_words().size() * static_cast<std::size_t>(s.rank()));
  EXPECT_FALSE(s.ell_overridden());
}

TEST_P(CycleSetupTest, PowerIdentityOverDomain) {
  const auto& s = setup(GetParam());
  for (const auto& a : s.domain_words())
    for (int j = 1; j <= s.rank(); ++j) {
      const auto c = check_power_identity(s, a, j);
      EXPECT_TRUE(c.holds);
      EXPECT_TRUE(c.integral);
    }
}

TEST_P(CycleSetupTest, CertificatesValidate) {
  const auto& s = setup(GetParam());
  const auto certs = membership_certificates(s);
  EXPECT_EQ(certs.size(), (std::size_t{1} << s.rank()) * s.domain_words().size());
  for (const auto& c : certs) {
    EXPECT_TRUE(c.valid());
    EXPECT_EQ(c.checked.size(), s.de_sample().size());
    if (c.subset.empty()) EXPECT_EQ(c.gamma, s.word_matrix(c.word));
  }
}

INSTANTIATE_TEST_SUITE_P(Ranks, CycleSetupTest, ::testing::Values(2, 3));

TEST(CycleSetup, TwoByTwoIsDegenerate) {
  CycleConfig c;
  c.n = 2;
  const CycleSetup s(c);
  EXPECT_TRUE(s.generators().empty());
  EXPECT_EQ(s.domain_words(), std::vector<torus::WordExponents>{torus::WordExponents{}});
  EXPECT_EQ(s.de_sample().size(), 1u);
  EXPECT_EQ(s.ell(), 1);
}

TEST(CycleSetup, SampleIsCornersAndBarycentre) {
  CycleConfig c;
  c.n = 3;
  const CycleSetup s(c);
  const auto& nu = s.generator_translations().at(0);
  ASSERT_EQ(s.de_sample().size(), 3u);
  EXPECT_EQ(s.de_sample()[0], s.e());
  EXPECT_EQ(s.de_sample()[1], (DCoords{s.e()[0] - nu[0], s.e()[1] - nu[1]}));
  EXPECT_EQ(s.de_sample()[2], (DCoords{s.e()[0] - nu[0] / 2, s.e()[1] - nu[1] / 2}));
}

TEST(CycleSetup, EllOverride) {
  CycleConfig c;
  c.n = 3;
  c.ell = BigInt(5);
  const CycleSetup s(c);
  EXPECT_EQ(s.ell(), 5);
  EXPECT_TRUE(s.ell_overridden());
  EXPECT_FALSE(s.ell_factors().empty());
  c.ell = BigInt(0);
  EXPECT_THROW(CycleSetup{c}, std::invalid_argument);
}

TEST(CycleSetup, BadConfig) {
  CycleConfig c;
  c.n = 1;
  EXPECT_THROW(CycleSetup{c}, std::invalid_argument);
  c.n = 3;
  c.k = 0;
  EXPECT_THROW(CycleSetup{c}, std::invalid_argument);
}

TEST(CycleSetup, DeterministicConstruction) {
  CycleConfig c;
  c.n = 3;
  c.k = 1;
  const CycleSetup a(c), b(c);
  EXPECT_EQ(a.ell(), b.ell());
  EXPECT_EQ(a.domain_words(), b.domain_words());
  EXPECT_EQ(a.floor(), b.floor());
}

}  // namespace
}  // namespace slzt::cycle

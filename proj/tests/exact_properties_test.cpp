#include <gtest/gtest.h>

#include <functional>
#include <memory>

#include "slzt/exact.hpp"
#include "slzt/rootlift.hpp"
#include "test_support.hpp"

namespace slzt {
namespace {

// Commutative ring axioms on random triples drawn by `gen`. For truncated
// series the comparison is agreement above the common floor.
template <class R, class Gen, class Eq>
void check_ring_axioms(Gen gen, Eq eq, const R& zero, const R& one, int trials) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < trials; ++k) {
    const R a = gen(rng), b = gen(rng), c = gen(rng);
    EXPECT_TRUE(eq(a + b, b + a));
    EXPECT_TRUE(eq((a + b) + c, a + (b + c)));
    EXPECT_TRUE(eq(a + zero, a));
    EXPECT_TRUE(eq(a - a, zero));
    EXPECT_TRUE(eq(a * b, b * a));
    EXPECT_TRUE(eq((a * b) * c, a * (b * c)));
    EXPECT_TRUE(eq(a * one, a));
    EXPECT_TRUE(eq(a * (b + c), a * b + a * c));
  }
}

TEST(RingAxioms, Rationals) {
  check_ring_axioms<BigRational>([](auto& r) { return testing::random_rational(r); },
                                 std::equal_to<>(), BigRational(0), BigRational(1), 200);
}

TEST(RingAxioms, Polynomials) {
  check_ring_axioms<Poly>([](auto& r) { return testing::random_poly(r, 5); }, std::equal_to<>(),
                          Poly(), Poly(1), 100);
}

TEST(RingAxioms, RationalFunctions) {
  auto gen = [](std::mt19937_64& r) {
    Poly d = testing::random_poly(r, 2, true);
    if (d.zero()) d = Poly(1);
    return RatFunc(testing::random_poly(r, 2, true), d);
  };
  check_ring_axioms<RatFunc>(gen, std::equal_to<>(), RatFunc(), RatFunc(1), 40);
}

TEST(RingAxioms, TruncatedLaurentSeries) {
  auto gen = [](std::mt19937_64& r) { return testing::random_series(r, 10, -3, 3, false); };
  auto eq = [](const LaurentSeries& x, const LaurentSeries& y) { return x.agrees_with(y); };
  check_ring_axioms<LaurentSeries>(gen, eq, LaurentSeries(), LaurentSeries(1), 150);
}

TEST(RingAxioms, ExactLaurentSeriesAreStrictlyEqual) {
  auto gen = [](std::mt19937_64& r) { return testing::random_series(r, -1, -3, 3, false); };
  check_ring_axioms<LaurentSeries>(gen, std::equal_to<>(), LaurentSeries(), LaurentSeries(1), 100);
}

TEST(RingAxioms, AlgebraicExtension) {
  auto mod = std::make_shared<const Modulus>(rootlift::build_f(3));
  auto gen = [mod](std::mt19937_64& r) {
    std::vector<RatFunc> c;
    for (int k = 0; k < 3; ++k) c.emplace_back(testing::random_poly(r, 1, true, 3));
    return AlgebraicElem(mod, c);
  };
  check_ring_axioms<AlgebraicElem>(gen, std::equal_to<>(), AlgebraicElem::constant(mod, RatFunc()),
                                   AlgebraicElem::constant(mod, RatFunc(1)), 15);
}

TEST(TruncationProperty, AgreementSurvivesTruncation) {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 100; ++k) {
    const auto a = testing::random_series(rng, 12);
    const auto cut = a.truncated(a.top() - 4);
    EXPECT_TRUE(cut.agrees_with(a));
    EXPECT_EQ(cut.floor(), a.top() - 4);
  }
}

}  // namespace
}  // namespace slzt

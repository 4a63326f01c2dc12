#include <cstdlib>

#include <gtest/gtest.h>

#include "expansiv/errors.hpp"
#include "expansiv/roots.hpp"
#include "oracles.hpp"

using namespace expansiv;

namespace {

double nearest(const RootSet& set, std::complex<double> z) {
  double best = 1e300;
  for (const auto& r : set.roots) best = std::min(best, std::abs(r - z));
  return best;
}

}  // namespace

TEST(Roots, QuadraticRealPair) {
  const RootSet r = roots_all(make_poly({-1, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_DOUBLE_EQ(r.roots[0].real(), -1.0);
  EXPECT_DOUBLE_EQ(r.roots[1].real(), 1.0);
  EXPECT_EQ(r.roots[0].imag(), 0.0);
}

TEST(Roots, ConjugatePairSortedByImaginaryPart) {
  const RootSet r = roots_all(make_poly({1, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r.roots[0].imag(), -1.0, 1e-14);
  EXPECT_NEAR(r.roots[1].imag(), 1.0, 1e-14);
  EXPECT_EQ(r.roots[0], std::conj(r.roots[1]));
}

TEST(Roots, RepeatedRootsAreListedOnceWithMultiplicity) {
  auto p = make_poly({1});
  for (int k = 0; k < 3; ++k) p = p * make_poly({-1, 1});
  p = p * make_poly({2, 1});
  const RootSet r = roots_all(p);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r.roots[0].real(), -2.0, 1e-12);
  EXPECT_NEAR(r.roots[1].real(), 1.0, 1e-12);
  EXPECT_EQ(r.multiplicity[0], 1u);
  EXPECT_EQ(r.multiplicity[1], 3u);
  EXPECT_TRUE(r.has_repeated());
}

TEST(Roots, ZeroPolynomialThrowsAndConstantIsFlagged) {
  try {
    (void)roots_all(RationalPoly());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroPolynomial);
  }
  const RootSet c = roots_all(make_poly({5}));
  EXPECT_TRUE(c.empty());
  EXPECT_TRUE(c.constant_input);
}

TEST(Roots, OutputIsDeterministic) {
  oracle::Gen gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = gen.poly(static_cast<int>(gen.integer(1, 9)));
    const RootSet a = roots_all(p);
    const RootSet b = roots_all(p);
    EXPECT_EQ(a.roots, b.roots);
    EXPECT_EQ(a.multiplicity, b.multiplicity);
  }
}

TEST(Roots, ResidualContractHoldsOnRandomPolynomials) {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = gen.poly(static_cast<int>(gen.integer(1, 10)));
    const RootSet r = roots_all(p);
    const double scale = 1.0 + max_abs_coeff(p).to_double();
    double floor = 0.0;
    for (const auto& z : r.roots) {
      double s = 0.0;
      double power = 1.0;
      for (const auto& c : p.coeffs()) {
        s += std::abs(c.to_double()) * power;
        power *= std::abs(z);
      }
      floor = std::max(floor, 1e3 * 2.2e-16 * s);
      EXPECT_LE(std::abs(oracle::eval(oracle::from(p), z)), std::max(r.tolerance * scale, floor) * 1.0001)
          << to_string(p);
    }
    unsigned total = 0;
    for (auto m : r.multiplicity) total += m;
    EXPECT_EQ(total, *p.degree()) << to_string(p);
  }
}

TEST(Roots, ConstructedRootsAreRecovered) {
  oracle::Gen gen(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = static_cast<int>(gen.integer(1, 10));
    const auto c = oracle::constructed(gen, degree, 1.5, 1e-2);
    const RootSet r = roots_all(c.poly);
    ASSERT_EQ(r.size(), c.roots.size());
    for (const auto& z : c.roots) EXPECT_LE(nearest(r, z), 1e-8);
  }
}

TEST(Roots, HugeCoefficientsAreScaled) {
  // 1e15·(x − 2)(x + 3)
  const auto p = make_poly({-6, 1, 1}) * Rational(1000000000000000L);
  const RootSet r = roots_all(p);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r.roots[0].real(), -3.0, 1e-12);
  EXPECT_NEAR(r.roots[1].real(), 2.0, 1e-12);
}

TEST(Roots, ClusteredRootsStayDistinctAboveDedupRadius) {
  // (x − 1)(x − 1 − 1e-6)
  const auto p = make_poly({-1, 1}) * RationalPoly{Rational(-1000001, 1000000), Rational(1)};
  const RootSet r = roots_all(p);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r.roots[1].real() - r.roots[0].real(), 1e-6, 1e-12);
}

TEST(Roots, ToleranceEnvironmentOverride) {
  ::setenv("EXPANSIV_TOL", "1e-7", 1);
  EXPECT_DOUBLE_EQ(default_solve_tolerance(), 1e-7);
  ::setenv("EXPANSIV_TOL", "garbage", 1);
  EXPECT_DOUBLE_EQ(default_solve_tolerance(), kDefaultSolveTolerance);
  ::unsetenv("EXPANSIV_TOL");
  EXPECT_DOUBLE_EQ(default_solve_tolerance(), kDefaultSolveTolerance);
}

#include "shiftfact/connecting.hpp"
#include "shiftfact/sfact.hpp"
#include "test_support.hpp"

namespace shiftfact {
namespace {

using testing::near_relative;

TEST(SfProduct, Examples) {
  EXPECT_EQ(sf_product(Complex(7.3), Complex(-2.1), 0), Complex(1.0));
  EXPECT_EQ(sf_product(Complex(1.0), Complex(1.0), 4), Complex(24.0));
  EXPECT_EQ(sf_product(Complex(-2.0), Complex(1.0), 3), Complex(0.0));
  EXPECT_EQ(sf_product(Complex(3.0), Complex(-1.0), 3), Complex(6.0));
  EXPECT_EQ(sf_product(Rational(1), Rational(1), 4), Rational(24));
}

TEST(SfProduct, ShiftTimesFactorial) {
  const Rational s(3, 7);
  Rational factorial = 1;
  for (int n = 0; n <= 10; ++n) {
    if (n > 0) factorial *= Rational(n);
    EXPECT_EQ(sf_product(s, s, n), factorial * ipow(s, n)) << n;
  }
}

TEST(SfGeneral, Examples) {
  const Complex z(2.5, 1.0);
  EXPECT_EQ(sf_general(z, 0.7, 0.0), Complex(1.0));
  EXPECT_TRUE(near_relative(sf_general(z, 0.7, 1.0), z, 1e-14));
  EXPECT_TRUE(near_relative(sf_general(3.0, 1.0, 5.0), 2520.0, 1e-14));
}

TEST(SfGeneral, AgreesWithGammaRouteAtNonIntegerIndex) {
  const Complex z(1.3, -0.4), s(0.8, 0.5), t(2.0, 0.0);
  EXPECT_TRUE(near_relative(sf_general(z, s, t + Complex(0.0, 1e-30)), sf_product(z, s, 2), 1e-12));
}

TEST(SfGeneral, ZeroShiftIsPrincipalPower) {
  const Complex z(1.5, 2.0), t(0.3, -1.1);
  EXPECT_TRUE(near_relative(sf_general(z, 0.0, t), principal_power(z, t), 1e-14));
}

TEST(SfNegative, Examples) {
  EXPECT_EQ(sf_negative(Rational(3), Rational(1), 1), Rational(1, 2));
  EXPECT_EQ(sf_negative(Rational(5), Rational(1), 2), Rational(1, 12));
  EXPECT_EQ(sf_integer(Rational(5), Rational(1), 0), Rational(1));
  EXPECT_THROW(sf_negative(Rational(2), Rational(1), 2), PoleError);
}

TEST(RisingFalling, Examples) {
  EXPECT_EQ(rising(Rational(3), 2), Rational(12));
  EXPECT_EQ(falling(Rational(3), 2), Rational(6));
  EXPECT_EQ(falling(Rational(2), 3), Rational(0));
}

TEST(DeltaPower, Examples) {
  const Complex z(1.3, 0.2), s(0.6, -0.1), t(1.7, 0.4);
  EXPECT_TRUE(near_relative(delta_s_power(z, s, t, 0), sf_general(z, s, t), 1e-14));
  EXPECT_TRUE(near_relative(delta_s_power(1.0, 1.0, 3.0, 1), 18.0, 1e-13));
  EXPECT_LT(std::abs(delta_s_power(1.0, 1.0, 2.0, 3)), 1e-12);
}

TEST(GeneratingSeries, GeometricCase) {
  const auto g = generating_series(1.0, 1.0, 40);
  EXPECT_EQ(g.coefficients.front(), Complex(1.0));
  EXPECT_TRUE(near_relative(g.evaluate(0.3), 1.0 / 0.7, 1e-12));
  EXPECT_TRUE(near_relative(g.closed_form(0.3), 1.0 / 0.7, 1e-15));
}

TEST(MonomialExpansion, Examples) {
  EXPECT_EQ(monomial_expansion(Rational(1), 0), std::vector<Rational>{Rational(1)});
  EXPECT_EQ(monomial_expansion(Rational(1), 2), (std::vector<Rational>{0, 1, 1}));
  EXPECT_EQ(monomial_expansion(Rational(2), 3), (std::vector<Rational>{0, 8, 6, 1}));
}

TEST(Connecting, Examples) {
  const auto first = connecting_table(ConnectingKind::StirlingFirst, 6);
  EXPECT_EQ(first.row(3), (std::vector<BigInt>{0, 2, -3, 1}));
  EXPECT_EQ(connecting_table(ConnectingKind::StirlingSecond, 6).at(3, 2), BigInt(3));
  EXPECT_EQ(connecting_table(ConnectingKind::Lah, 6).at(3, 2), BigInt(6));
  EXPECT_EQ(first.at(3, 5), BigInt(0));
}

/// Stirling numbers of both kinds are inverse lower-triangular matrices.
TEST(Connecting, FirstAndSecondKindAreInverse) {
  constexpr int kN = 12;
  const auto first = connecting_table(ConnectingKind::StirlingFirst, kN);
  const auto second = connecting_table(ConnectingKind::StirlingSecond, kN);
  for (int n = 0; n <= kN; ++n) {
    for (int m = 0; m <= n; ++m) {
      BigInt acc = 0;
      for (int k = m; k <= n; ++k) acc += first.at(n, k) * second.at(k, m);
      EXPECT_EQ(acc, BigInt(n == m ? 1 : 0)) << n << "," << m;
    }
  }
}

class SfactSuite : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SfactSuite, AllPropertiesHold) {
  const auto report = verify::run_sfact_suite({.trials = 25, .seed = GetParam()});
  EXPECT_TRUE(testing::all_checks_pass(report));
}

INSTANTIATE_TEST_SUITE_P(Seeds, SfactSuite, ::testing::Values(11u, 12u, 13u));

}  // namespace
}  // namespace shiftfact

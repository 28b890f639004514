#include <cmath>
#include <numbers>

#include "shiftfact/format.hpp"
#include "shiftfact/gamma.hpp"
#include "shiftfact/rational.hpp"
#include "test_support.hpp"

namespace shiftfact {
namespace {

using testing::near_relative;

const double kSqrtPi = std::sqrt(std::numbers::pi);

TEST(LogGamma, KnownValues) {
  EXPECT_LT(std::abs(complex_log_gamma(1.0)), 1e-15);
  EXPECT_TRUE(near_relative(complex_log_gamma(5.0), std::log(24.0), 1e-14));
  EXPECT_TRUE(near_relative(complex_log_gamma(0.5), 0.5723649429247001, 1e-14));
}

TEST(Gamma, IntegerAndHalfInteger) {
  EXPECT_TRUE(near_relative(complex_gamma(4.0), 6.0, 1e-14));
  EXPECT_TRUE(near_relative(complex_gamma(-0.5), -2.0 * kSqrtPi, 1e-14));
}

TEST(Gamma, ReflectionAtPointThree) {
  const Complex z(0.3, 0.0);
  const Complex lhs = complex_gamma(z) * complex_gamma(1.0 - z);
  EXPECT_TRUE(near_relative(lhs, std::numbers::pi / std::sin(std::numbers::pi * 0.3), 1e-12));
}

TEST(Gamma, ComplexRecurrence) {
  for (Complex z : {Complex(0.3, 1.7), Complex(-2.4, 0.6), Complex(7.5, -3.0)}) {
    EXPECT_TRUE(near_relative(complex_gamma(z + 1.0), z * complex_gamma(z), 1e-12)) << z;
  }
}

TEST(Gamma, ReciprocalVanishesAtPoles) {
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(reciprocal_gamma(Complex(-k, 0.0)), Complex(0.0, 0.0)) << k;
}

TEST(PrincipalPower, Conventions) {
  EXPECT_TRUE(near_relative(principal_power(1.0, Complex(3.7, 2.0)), 1.0, 1e-15));
  EXPECT_TRUE(near_relative(principal_power(4.0, 0.5), 2.0, 1e-15));
  EXPECT_TRUE(near_relative(principal_power(-1.0, 0.5), Complex(0.0, 1.0), 1e-15));
}

TEST(ExactBinomial, Values) {
  EXPECT_EQ(exact_binomial(5, 2), Rational(10));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(exact_binomial(n, 0), Rational(1));
  EXPECT_EQ(exact_binomial(6, 7), Rational(0));
  EXPECT_EQ(exact_binomial(6, -1), Rational(0));
}

TEST(RationalParse, FractionsAndDecimals) {
  EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-6/8"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("-0.125"), Rational(-1, 8));
  EXPECT_EQ(Rational::parse("2.5e-3"), Rational(1, 400));
  EXPECT_EQ(Rational::parse("0.0625"), Rational(1, 16));
  EXPECT_EQ(Rational::parse("007"), Rational(7));
  EXPECT_THROW(Rational::parse("0x10/2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
}

TEST(ComplexLiteral, Forms) {
  EXPECT_EQ(parse_complex("3"), Complex(3.0, 0.0));
  EXPECT_EQ(parse_complex("2i"), Complex(0.0, 2.0));
  EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(parse_complex("1-2i"), Complex(1.0, -2.0));
  EXPECT_EQ(parse_complex("0.5+1e2i"), Complex(0.5, 100.0));
  EXPECT_EQ(parse_complex("3/4"), Complex(0.75, 0.0));
  EXPECT_THROW(parse_complex("1+"), std::invalid_argument);
  EXPECT_THROW(parse_complex("abc"), std::invalid_argument);
}

TEST(ComplexLiteral, RoundTrip) {
  for (Complex v : {Complex(24.0, 0.0), Complex(0.0, -1.5), Complex(1.25, -3.0), Complex(-0.0, 0.0)}) {
    EXPECT_EQ(parse_complex(format_complex(v)), v) << format_complex(v);
  }
  EXPECT_EQ(format_complex(Complex(-0.0, 0.0)), "0");
  EXPECT_EQ(format_complex(Complex(1.0, -2.0)), "1-2i");
}

TEST(LooksRational, Classification) {
  EXPECT_TRUE(looks_rational("7"));
  EXPECT_TRUE(looks_rational("-3/5"));
  EXPECT_FALSE(looks_rational("0.5"));
  EXPECT_FALSE(looks_rational("1e3"));
  EXPECT_FALSE(looks_rational("2i"));
}

}  // namespace
}  // namespace shiftfact

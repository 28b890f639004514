#include <cmath>
#include <numbers>

#include "shiftfact/rmtpdd.hpp"
#include "test_support.hpp"

namespace shiftfact::rmt {
namespace {

using testing::near_relative;

const double kSqrtPi = std::sqrt(std::numbers::pi);

TEST(Phi, Examples) {
  EXPECT_EQ(phi_element(hermite(2), 0, 1, 2.0, Parity::Plus), Complex(0.0));
  EXPECT_TRUE(near_relative(phi_element(hermite(1), 0, 0, 2.0, Parity::Plus), 1.0, 1e-14));
  EXPECT_TRUE(near_relative(phi_element(laguerre(0.0, 1), 0, 0, 1.0, Parity::Plus), 1.0, 1e-14));
}

TEST(Quadrature, Examples) {
  EXPECT_TRUE(near_relative(quadrature_phi(hermite(1), 0, 0, 1.0, Parity::Plus), kSqrtPi, 1e-12));
  EXPECT_TRUE(near_relative(quadrature_phi(gegenbauer(0.5, 1), 0, 0, 1.0, Parity::Plus), 2.0, 1e-12));
  EXPECT_TRUE(near_relative(quadrature_phi(laguerre(1.0, 1), 1, 0, 1.0, Parity::Plus), 2.0, 1e-12));
}

TEST(Mellin, HermiteEvenBlock) {
  const auto r = mellin_closed(hermite(3), 2.0, Parity::Plus);
  ASSERT_FALSE(r.factorization.empty());
  EXPECT_TRUE(near_relative(r.factorization.front(), 1.0, 1e-13));
}

TEST(Mellin, OddOrderOddParityVanishes) {
  for (int n : {1, 3, 5}) {
    EXPECT_EQ(mellin_closed(hermite(n), Complex(1.7, 0.3), Parity::Minus).value, Complex(0.0)) << n;
    EXPECT_EQ(mellin_closed(gegenbauer(1.2, n), 2.5, Parity::Minus).value, Complex(0.0)) << n;
  }
}

TEST(Mellin, LaguerrePairDeterminant) {
  const auto ens = laguerre(0.0, 2);
  const auto r = mellin_closed(ens, 1.0, Parity::Plus);
  EXPECT_TRUE(near_relative(r.determinant, 1.0, 1e-13));
  EXPECT_TRUE(near_relative(r.value, 0.5 * normalization_const(ens) * 2.0, 1e-13));
}

TEST(Mellin, ClosedMatchesQuadratureOnRealAxis) {
  for (const auto& ens : {hermite(3), laguerre(0.7, 3), gegenbauer(1.3, 3), jacobi(0.5, 0.5, 3)}) {
    for (double s : {1.0, 1.5, 3.0}) {
      EXPECT_TRUE(near_relative(mellin_closed(ens, s, Parity::Plus).value,
                                mellin_quadrature(ens, s, Parity::Plus), 1e-9))
          << ens.describe() << " s=" << s;
    }
  }
}

TEST(Mellin, JacobiAsymmetricLimitedToUnitShift) {
  EXPECT_NO_THROW(mellin_closed(jacobi(0.5, 1.5, 2), 1.0, Parity::Plus));
  EXPECT_THROW(mellin_closed(jacobi(0.5, 1.5, 2), 2.0, Parity::Plus), UnsupportedCase);
}

TEST(Normalization, Examples) {
  EXPECT_TRUE(near_relative(normalization_const(hermite(1)), 1.0 / kSqrtPi, 1e-14));
  EXPECT_TRUE(near_relative(normalization_const(laguerre(0.0, 1)), 1.0, 1e-14));
  EXPECT_TRUE(near_relative(normalization_const(jacobi(0.0, 0.0, 1)), 0.5, 1e-14));
}

TEST(Normalization, JacobiTwoPointQuadrature) {
  const auto ens = jacobi(1.5, 2.5, 2);
  const double integral = eigenvalue_integral_2d(ens, [](double) { return 1.0; });
  EXPECT_TRUE(near_relative(integral, std::exp(-log_normalization_const(ens)), 1e-6));
}

TEST(IntegerMoment, Examples) {
  for (const auto& ens : {hermite(2), laguerre(0.3, 3), gegenbauer(0.8, 2), jacobi(0.2, 1.1, 4)}) {
    EXPECT_TRUE(near_relative(integer_moment(ens, 0), 1.0, 1e-8)) << ens.describe();
  }
  EXPECT_TRUE(near_relative(integer_moment(hermite(1), 2), 0.5, 1e-13));
  EXPECT_TRUE(near_relative(integer_moment(laguerre(0.0, 1), 1), 1.0, 1e-13));
}

TEST(Ensemble, ValidationRejectsOutOfRange) {
  EXPECT_THROW(laguerre(-1.0, 2).validate(), DomainError);
  EXPECT_THROW(gegenbauer(-0.5, 2).validate(), DomainError);
  EXPECT_THROW(jacobi(0.0, -1.5, 2).validate(), DomainError);
  EXPECT_THROW(hermite(0).validate(), DomainError);
}

TEST(RmtpddSuite, AllPropertiesHold) {
  const auto report = verify::run_rmtpdd_suite({.trials = 2, .seed = 41});
  EXPECT_TRUE(testing::all_checks_pass(report));
}

}  // namespace
}  // namespace shiftfact::rmt

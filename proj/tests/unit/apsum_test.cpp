#include "shiftfact/apsum.hpp"
#include "test_support.hpp"

namespace shiftfact::apsum {
namespace {

using R = Rational;

TEST(ApSum, DirectExamples) {
  EXPECT_EQ(ap_sum_direct(Args<R>{R(5, 3), R(-2), R(7), 0, 7}), R(7));
  EXPECT_EQ(ap_sum_direct(Args<R>{1, 1, 1, 1, 3}), R(6));
  EXPECT_EQ(ap_sum_direct(Args<R>{1, 1, 1, 2, 3}), R(20));
}

TEST(ApSum, RecurrenceExamples) {
  EXPECT_EQ(ap_sum_recurrence(Args<R>{R(2), R(3), R(-1), 0, 9}), R(9));
  EXPECT_EQ(ap_sum_recurrence(Args<R>{1, 1, 1, 2, 3}), R(20));
  const Args<R> x{R(1, 2), R(1, 3), R(-2), 5, 4};
  EXPECT_EQ(ap_sum_recurrence(x), ap_sum_direct(x));
}

TEST(ApSum, ClosedExamples) {
  EXPECT_EQ(ap_sum_closed(Args<R>{1, 1, 1, 1, 3}), R(6));
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(ap_sum_closed(Args<R>{1, 1, R(-1), n + 1, n}), R(0)) << n;
  EXPECT_EQ(ap_sum_closed(Args<R>{1, 1, R(-1), 2, 3}), R(8));
}

TEST(ApSum, ClosedRequiresMatchedStep) {
  EXPECT_THROW(ap_sum_closed(Args<R>{1, 2, 1, 2, 3}), DomainError);
}

TEST(ApSum, InvalidArguments) {
  EXPECT_THROW(ap_sum_direct(Args<R>{1, 1, 1, 2, 0}), DomainError);
  EXPECT_THROW(ap_sum_direct(Args<R>{1, 1, 1, -1, 2}), DomainError);
  EXPECT_THROW(ap_sum_recurrence(Args<R>{1, 0, 1, 2, 3}), DomainError);
}

/// Adding one more term increases the sum by exactly that term.
TEST(ApSum, TelescopingInN) {
  verify::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Args<R> x{rng.small_rational(), rng.small_rational(), rng.small_rational(), rng.integer(0, 6), rng.integer(1, 12)};
    Args<R> longer = x;
    longer.n += 1;
    EXPECT_EQ(ap_sum_direct(longer) - ap_sum_direct(x), sf_product(x.a + R(x.n) * x.r, x.s, x.p));
  }
}

class ApsumSuite : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ApsumSuite, AllPropertiesHold) {
  const auto report = verify::run_apsum_suite({.trials = 50, .seed = GetParam()});
  EXPECT_TRUE(testing::all_checks_pass(report));
}

INSTANTIATE_TEST_SUITE_P(Seeds, ApsumSuite, ::testing::Values(7u, 31u, 32u));

}  // namespace
}  // namespace shiftfact::apsum

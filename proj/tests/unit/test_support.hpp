#pragma once

#include <gtest/gtest.h>

#include <complex>
#include <string>

#include "shiftfact/complex.hpp"
#include "shiftfact/verify.hpp"

namespace shiftfact::testing {

inline ::testing::AssertionResult near_relative(Complex actual, Complex expected, double tol) {
  const double scale = std::max(std::abs(expected), 1e-300);
  const double r = std::abs(actual - expected) / scale;
  if (r <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << actual << ", expected " << expected << " (relative " << r
                                       << " > " << tol << ")";
}

/// Every check in the report passed; the failure message lists the ones that
/// did not, with their first recorded counterexample.
inline ::testing::AssertionResult all_checks_pass(const verify::SuiteReport& report) {
  std::string failed;
  for (const auto& c : report.checks) {
    if (!c.passed()) failed += "\n  " + c.name + ": " + c.first_failure;
  }
  if (failed.empty()) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << report.suite << " seed " << report.seed << failed;
}

}  // namespace shiftfact::testing

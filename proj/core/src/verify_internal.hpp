#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "shiftfact/gamma.hpp"
#include "shiftfact/scalar.hpp"
#include "shiftfact/verify.hpp"

namespace shiftfact::verify::detail {

/// Gamma arguments closer than this to a pole are resampled.
inline constexpr double kSamplingPoleGuard = 0.05;

/// Upper bound on redraws before a trial is declared unsampleable.
inline constexpr int kMaxResample = 2000;

/// "%.3e" rendering used in reports and failure notes.
std::string sci(double v);

inline bool gamma_safe(Complex x) { return !near_nonpositive_integer(x, kSamplingPoleGuard); }

/// Accumulates residuals for one named property.
class Check {
 public:
  Check(std::string name, std::string group, double tolerance) {
    result_.name = std::move(name);
    result_.group = std::move(group);
    result_.tolerance = tolerance;
  }

  static Check exact(std::string name, std::string group) {
    Check c(std::move(name), std::move(group), 0.0);
    c.result_.exact = true;
    return c;
  }

  /// `describe` is only invoked for the first failure.
  template <class Describe>
  void residual(double r, Describe&& describe) {
    ++result_.trials;
    const bool bad = !(r <= result_.tolerance);
    if (std::isnan(r)) {
      result_.max_residual = std::numeric_limits<double>::infinity();
    } else {
      result_.max_residual = std::max(result_.max_residual, r);
    }
    if (bad) fail_with(describe() + " residual " + sci(r));
  }

  template <class Describe>
  void equal(bool same, Describe&& describe) {
    ++result_.trials;
    if (!same) fail_with(describe());
  }

  void error(const std::string& what) {
    ++result_.trials;
    fail_with(what);
  }

  CheckResult result() const { return result_; }

 private:
  void fail_with(const std::string& detail) {
    if (result_.failures++ == 0) result_.first_failure = detail;
  }

  CheckResult result_;
};

/// Compares two sides in their own field: exact equality on rationals,
/// relative residual on complex values.
template <Field T, class Describe>
void compare(Check& check, const T& lhs, const T& rhs, Describe&& describe) {
  if constexpr (is_exact_v<T>) {
    check.equal(lhs == rhs, [&] { return describe() + ": " + to_string(lhs) + " != " + to_string(rhs); });
  } else {
    check.residual(relative_residual(lhs, rhs),
                   [&] { return describe() + ": " + to_string(lhs) + " vs " + to_string(rhs); });
  }
}

/// Runs `trial` until it produces a verdict, redrawing while it returns
/// false (sample rejected). Exceptions count as failures.
template <class Trial>
void run_trial(Check& check, Trial&& trial) {
  try {
    for (int attempt = 0; attempt < kMaxResample; ++attempt) {
      if (trial()) return;
    }
    check.error("no admissible sample after " + std::to_string(kMaxResample) + " draws");
  } catch (const std::exception& e) {
    check.error(std::string("exception: ") + e.what());
  }
}

template <Field T>
T draw(Rng& rng, double radius) {
  if constexpr (is_exact_v<T>) {
    return rng.small_rational();
  } else {
    return rng.in_disc(radius);
  }
}

/// Runs `section` and charges its wall-clock time to the groups of the
/// checks it appended, split by check count.
template <class F>
void timed(SuiteReport& report, F&& section) {
  const std::size_t first = report.checks.size();
  const auto start = std::chrono::steady_clock::now();
  section();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::size_t added = report.checks.size() - first;
  for (std::size_t k = first; k < report.checks.size(); ++k) {
    report.group_seconds[report.checks[k].group] += seconds / static_cast<double>(added);
  }
}

inline std::string field_suffix(bool exact) { return exact ? ".exact" : ""; }

}  // namespace shiftfact::verify::detail

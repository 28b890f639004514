#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "shiftfact/complex.hpp"
#include "shiftfact/rational.hpp"

namespace shiftfact::verify {

/// Reproducible random stream. Doubles are built from the top 53 bits of
/// mt19937_64 output, so a seed yields the same samples on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);   // [lo, hi)
  int integer(int lo, int hi);            // inclusive range
  Complex in_disc(double radius);         // uniform on |z| <= radius
  /// p/q with |p| <= max_num and 1 <= q <= max_den.
  Rational small_rational(int max_num = 12, int max_den = 6);

 private:
  std::mt19937_64 engine_;
};

/// Outcome of one named property over a batch of trials.
struct CheckResult {
  std::string name;
  std::string group;       // criterion bucket, e.g. "identities", "det_oracle"
  bool exact = false;      // zero-residual comparison on rationals
  double tolerance = 0.0;  // relative tolerance (unused when exact)
  std::size_t trials = 0;
  std::size_t failures = 0;
  double max_residual = 0.0;
  std::string first_failure;

  bool passed() const { return trials > 0 && failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckResult> checks;
  /// Wall-clock seconds per check group. Never rendered, so reports stay
  /// byte-identical across runs.
  std::map<std::string, double> group_seconds;

  bool passed() const;
  std::size_t failed_checks() const;
};

struct SuiteOptions {
  int trials = 0;  // 0 picks the suite default
  std::uint64_t seed = 1;
};

/// Suite names accepted by run_suite: sfact, detform, apsum, rmtpdd.
const std::vector<std::string>& suite_names();
int default_trials(std::string_view suite);

SuiteReport run_sfact_suite(const SuiteOptions& options);
SuiteReport run_detform_suite(const SuiteOptions& options);
SuiteReport run_apsum_suite(const SuiteOptions& options);
SuiteReport run_rmtpdd_suite(const SuiteOptions& options);

/// Dispatch by name; "all" is not accepted here (see run_suites).
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

/// "all" expands to every suite in suite_names() order.
std::vector<SuiteReport> run_suites(std::string_view name, const SuiteOptions& options);

/// Deterministic renderings (no timings, no addresses).
std::string reports_to_json(const std::vector<SuiteReport>& reports);
std::string reports_to_text(const std::vector<SuiteReport>& reports);
std::string reports_to_csv(const std::vector<SuiteReport>& reports);

}  // namespace shiftfact::verify

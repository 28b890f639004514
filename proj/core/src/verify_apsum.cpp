#include "shiftfact/apsum.hpp"
#include "verify_internal.hpp"

namespace shiftfact::verify {

namespace {

using apsum::Args;
using detail::Check;
using detail::compare;

constexpr int kMaxOrder = 8;
constexpr int kMaxTerms = 20;

template <Field T>
std::string describe(const Args<T>& x) {
  return "a=" + to_string(x.a) + " r=" + to_string(x.r) + " s=" + to_string(x.s) + " p=" + std::to_string(x.p) +
         " n=" + std::to_string(x.n);
}

/// direct = recurrence = closed on r = +-s, and direct = recurrence for a
/// free nonzero step, exact on rationals.
void triple_agreement(Rng& rng, int trials, std::vector<CheckResult>& out) {
  Check triple = Check::exact("triple_agreement.exact", "apsum");
  Check pair = Check::exact("recurrence_general_step.exact", "apsum");
  for (int p = 0; p <= kMaxOrder; ++p) {
    for (int n = 1; n <= kMaxTerms; ++n) {
      for (int k = 0; k < std::max(1, trials / 10); ++k) {
        detail::run_trial(triple, [&] {
          Args<Rational> x{rng.small_rational(), Rational(0), rng.small_rational(), p, n};
          if (x.s.is_zero()) return false;
          x.r = rng.integer(0, 1) == 0 ? x.s : Rational(-x.s);
          const Rational direct = apsum::ap_sum_direct(x);
          const bool same = direct == apsum::ap_sum_recurrence(x) && direct == apsum::ap_sum_closed(x);
          triple.equal(same, [&] { return describe(x); });
          return true;
        });
        detail::run_trial(pair, [&] {
          Args<Rational> x{rng.small_rational(), rng.small_rational(), rng.small_rational(), p, n};
          if (x.r.is_zero()) return false;
          compare(pair, apsum::ap_sum_direct(x), apsum::ap_sum_recurrence(x), [&] { return describe(x); });
          return true;
        });
      }
    }
  }
  out.push_back(triple.result());
  out.push_back(pair.result());
}

/// Rising and falling factorial power sums at a = r = 1.
void anchored_instances(std::vector<CheckResult>& out) {
  Check check = Check::exact("unit_progression.exact", "apsum");
  const Rational one(1);
  check.equal(apsum::ap_sum_direct(Args<Rational>{one, one, one, 1, 3}) == Rational(6) &&
                  apsum::ap_sum_closed(Args<Rational>{one, one, one, 1, 3}) == Rational(6),
              [] { return std::string("S_{1;1,3}(1,1) != 6"); });
  for (int n = 1; n <= kMaxTerms; ++n) {
    for (int p = 0; p <= n + 3; ++p) {
      const Args<Rational> rising_args{one, one, one, p, n};
      const Args<Rational> falling_args{one, one, Rational(-1), p, n};
      const Rational rising_sum = apsum::ap_sum_closed(rising_args);
      const Rational falling_sum = apsum::ap_sum_closed(falling_args);
      const Rational rising_expected = rising(Rational(n), p + 1) / Rational(p + 1);
      Rational falling_expected;
      if (p == 0) falling_expected = Rational(n);
      else if (p <= n) falling_expected = falling(Rational(n + 1), p + 1) / Rational(p + 1);
      else falling_expected = Rational(0);
      const bool ok = rising_sum == rising_expected && rising_sum == apsum::ap_sum_direct(rising_args) &&
                      falling_sum == falling_expected && falling_sum == apsum::ap_sum_direct(falling_args);
      check.equal(ok, [&] { return "n=" + std::to_string(n) + " p=" + std::to_string(p); });
    }
  }
  out.push_back(check.result());

  Check zero = Check::exact("falling_zero_branch.exact", "apsum");
  for (int n = 1; n <= kMaxTerms; ++n) {
    const Args<Rational> x{one, one, Rational(-1), n + 1, n};
    zero.equal(apsum::ap_sum_closed(x).is_zero() && apsum::ap_sum_direct(x).is_zero() &&
                   apsum::ap_sum_recurrence(x).is_zero(),
               [&] { return describe(x); });
  }
  out.push_back(zero.result());
}

void symmetry_checks(Rng& rng, int trials, std::vector<CheckResult>& out) {
  Check negation = Check::exact("negation.exact", "apsum");
  for (int k = 0; k < trials; ++k) {
    const Args<Rational> x{rng.small_rational(), rng.small_rational(), rng.small_rational(),
                           rng.integer(0, kMaxOrder), rng.integer(1, kMaxTerms)};
    const Args<Rational> neg{-x.a, -x.r, x.s, x.p, x.n};
    const Args<Rational> flipped{x.a, x.r, -x.s, x.p, x.n};
    compare(negation, apsum::ap_sum_direct(neg),
            Rational(Rational(parity_sign(x.p)) * apsum::ap_sum_direct(flipped)), [&] { return describe(x); });
  }
  out.push_back(negation.result());

  Check scaling("shift_scaling", "apsum", 1e-10);
  for (int k = 0; k < trials; ++k) {
    detail::run_trial(scaling, [&] {
      const Args<Complex> x{rng.in_disc(5.0), rng.in_disc(5.0), rng.in_disc(5.0), rng.integer(0, kMaxOrder),
                            rng.integer(1, kMaxTerms)};
      if (std::abs(x.s) < 0.05) return false;
      const Args<Complex> unit{x.a / x.s, x.r / x.s, Complex(1.0, 0.0), x.p, x.n};
      compare(scaling, apsum::ap_sum_direct(x), Complex(ipow(x.s, x.p) * apsum::ap_sum_direct(unit)),
              [&] { return describe(x); });
      return true;
    });
  }
  out.push_back(scaling.result());
}

}  // namespace

SuiteReport run_apsum_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "apsum";
  report.seed = options.seed;
  report.trials = options.trials > 0 ? options.trials : default_trials("apsum");
  Rng rng(options.seed);
  detail::timed(report, [&] { triple_agreement(rng, report.trials, report.checks); });
  detail::timed(report, [&] { anchored_instances(report.checks); });
  detail::timed(report, [&] { symmetry_checks(rng, report.trials, report.checks); });
  return report;
}

}  // namespace shiftfact::verify

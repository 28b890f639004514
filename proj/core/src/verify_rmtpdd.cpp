#include <array>

#include "shiftfact/errors.hpp"
#include "shiftfact/rmtpdd.hpp"
#include "verify_internal.hpp"

namespace shiftfact::verify {

namespace {

using detail::Check;
using detail::compare;
using rmt::EnsembleSpec;
using rmt::Parity;

constexpr std::array<double, 4> kShifts{0.7, 1.0, 2.0, 3.5};
constexpr std::array<Parity, 2> kParities{Parity::Plus, Parity::Minus};

/// One ensemble of each family with randomly drawn shape parameters.
std::vector<EnsembleSpec> draw_ensembles(Rng& rng, int n) {
  return {rmt::hermite(n), rmt::laguerre(rng.uniform(-0.5, 3.0), n), rmt::gegenbauer(rng.uniform(-0.25, 3.0), n),
          rmt::jacobi(rng.uniform(-0.5, 3.0), rng.uniform(-0.5, 3.0), n)};
}

std::string where(const EnsembleSpec& ens, Complex s, Parity parity) {
  return ens.describe() + " s=" + to_string(s) + " parity=" + std::string(rmt::parity_name(parity));
}

void phi_checks(Rng& rng, int trials, std::vector<CheckResult>& out) {
  constexpr int kMaxIndexSum = 8;
  std::array<Check, 4> checks{Check("phi.hermite", "rmt_phi", 1e-8), Check("phi.laguerre", "rmt_phi", 1e-8),
                              Check("phi.gegenbauer", "rmt_phi", 1e-8), Check("phi.jacobi", "rmt_phi", 1e-8)};
  for (int t = 0; t < trials; ++t) {
    const auto ensembles = draw_ensembles(rng, 1);
    for (std::size_t e = 0; e < ensembles.size(); ++e) {
      const EnsembleSpec& ens = ensembles[e];
      const bool jacobi = ens.kind == rmt::Ensemble::Jacobi;
      for (double s : kShifts) {
        for (Parity parity : kParities) {
          if (jacobi && (s != 1.0 || parity != Parity::Plus)) continue;
          for (int j = 0; j <= kMaxIndexSum; ++j) {
            for (int k = 0; j + k <= kMaxIndexSum; ++k) {
              auto describe = [&] {
                return where(ens, s, parity) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
              };
              try {
                const Complex closed = rmt::phi_element(ens, j, k, s, parity);
                const auto q = rmt::quadrature_phi_detail(ens, j, k, s, parity);
                // An entry that vanishes identically is judged against the
                // integral of |integrand|.
                const double r = closed == Complex(0.0, 0.0)
                                     ? (q.l1 > 0.0 ? std::abs(q.value) / q.l1 : std::abs(q.value))
                                     : relative_residual(closed, Complex(q.value, 0.0));
                checks[e].residual(r, describe);
              } catch (const std::exception& ex) {
                checks[e].error(describe() + ": " + ex.what());
              }
            }
          }
        }
      }
    }
  }
  for (auto& c : checks) out.push_back(c.result());
}

Complex random_shift(Rng& rng) { return {rng.uniform(0.5, 4.0), rng.uniform(-2.0, 2.0)}; }

void checkerboard_checks(Rng& rng, int trials, std::vector<CheckResult>& out) {
  Check full("checkerboard.full_matrix", "rmt_blocks", 1e-9);
  Check closed("block_closed_form", "rmt_blocks", 1e-9);
  Check odd = Check::exact("odd_order_odd_parity_vanishes", "rmt_blocks");
  for (int t = 0; t < trials; ++t) {
    const double lambda = rng.uniform(-0.25, 3.0);
    const double alpha = rng.uniform(-0.5, 3.0);
    for (int n = 1; n <= 8; ++n) {
      for (Parity parity : kParities) {
        const Complex s = random_shift(rng);
        for (const EnsembleSpec& ens : {rmt::hermite(n), rmt::gegenbauer(lambda, n)}) {
          auto describe = [&] { return where(ens, s, parity); };
          try {
            const auto blocks = rmt::checkerboard_blocks(ens, s, parity);
            std::vector<Complex> block_dets;
            for (const auto& b : blocks) block_dets.push_back(det::det_oracle(b));
            if (n <= 6) {
              compare(full, rmt::checkerboard_combine(n, parity, block_dets),
                      det::det_oracle(rmt::phi_matrix(ens, s, parity)), describe);
            }
            const auto mellin = rmt::mellin_closed(ens, s, parity);
            if (parity == Parity::Minus && n % 2 == 1) {
              odd.equal(mellin.determinant == Complex(0.0, 0.0) && blocks.empty(), describe);
            }
            for (std::size_t b = 0; b < blocks.size(); ++b) {
              if (blocks[b].size() > 4) continue;
              compare(closed, mellin.factorization.at(b), block_dets[b], describe);
            }
          } catch (const std::exception& ex) {
            closed.error(describe() + ": " + ex.what());
          }
        }
        if (n <= 4) {
          const EnsembleSpec ens = rmt::laguerre(alpha, n);
          const Complex ls = random_shift(rng);
          auto describe = [&] { return where(ens, ls, Parity::Plus); };
          try {
            compare(closed, rmt::mellin_closed(ens, ls, Parity::Plus).determinant,
                    det::det_oracle(rmt::phi_matrix(ens, ls, Parity::Plus)), describe);
          } catch (const std::exception& ex) {
            closed.error(describe() + ": " + ex.what());
          }
        }
      }
    }
  }
  out.push_back(full.result());
  out.push_back(closed.result());
  out.push_back(odd.result());
}

void normalization_checks(Rng& rng, int trials, std::vector<CheckResult>& out) {
  Check via_det("jacobi_normalization.hankel", "rmt_normalization", 1e-10);
  Check phi_oracle("jacobi_normalization.phi_oracle", "rmt_normalization", 1e-9);
  Check via_2d("jacobi_normalization.quadrature_2d", "rmt_normalization", 1e-5);
  Check unit("integer_moment.zero", "rmt_normalization", 1e-8);
  Check norms("monic_norms.quadrature", "rmt_normalization", 1e-9);
  for (int t = 0; t < trials; ++t) {
    const double a = rng.uniform(-0.5, 3.0);
    const double b = rng.uniform(-0.5, 3.0);
    for (int n = 1; n <= 5; ++n) {
      const EnsembleSpec ens = rmt::jacobi(a, b, n);
      const double inverse = std::exp(-rmt::log_normalization_const(ens));
      auto describe = [&] { return ens.describe(); };
      compare(via_det, Complex(rmt::jacobi_inverse_normalization_via_det(ens, false), 0.0), Complex(inverse, 0.0),
              describe);
      compare(via_det, Complex(rmt::jacobi_inverse_normalization_via_det(ens, true), 0.0), Complex(inverse, 0.0),
              describe);
      // det_oracle over the double-precision Phi matrix itself.
      compare(phi_oracle,
              Complex(std::exp(std::lgamma(n + 1.0)) *
                          det::det_oracle(rmt::phi_matrix(ens, 1.0, Parity::Plus)).real(),
                      0.0),
              Complex(inverse, 0.0), describe);
      if (n == 2) {
        const double integral = rmt::eigenvalue_integral_2d(ens, [](double) { return 1.0; });
        compare(via_2d, Complex(integral, 0.0), Complex(inverse, 0.0), describe);
      }
    }
    for (int n = 1; n <= 4; ++n) {
      for (const EnsembleSpec& ens : draw_ensembles(rng, n)) {
        compare(unit, Complex(rmt::integer_moment(ens, 0), 0.0), Complex(1.0, 0.0), [&] { return ens.describe(); });
      }
    }
    for (const EnsembleSpec& ens : draw_ensembles(rng, 6)) {
      const auto nu = rmt::monic_norms(ens, 6);
      for (int j = 0; j < 6; ++j) {
        compare(norms, Complex(nu[static_cast<std::size_t>(j)], 0.0),
                Complex(rmt::monic_norm_quadrature(ens, j), 0.0),
                [&] { return ens.describe() + " j=" + std::to_string(j); });
      }
    }
  }
  out.push_back(via_det.result());
  out.push_back(phi_oracle.result());
  out.push_back(via_2d.result());
  out.push_back(unit.result());
  out.push_back(norms.result());

  // E[x_0^2 x_1^2] for the two-point Hermite ensemble, once from the
  // eigenvalue integral and once as the second moment of the determinant.
  Check expectation("hermite_second_moment.quadrature_2d", "rmt_normalization", 1e-6);
  const EnsembleSpec ens = rmt::hermite(2);
  const double integral = rmt::eigenvalue_integral_2d(ens, [](double x) { return x * x; });
  compare(expectation, Complex(rmt::normalization_const(ens) * integral, 0.0),
          Complex(rmt::integer_moment(ens, 2), 0.0), [&] { return ens.describe(); });
  out.push_back(expectation.result());
}

}  // namespace

SuiteReport run_rmtpdd_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "rmtpdd";
  report.seed = options.seed;
  report.trials = options.trials > 0 ? options.trials : default_trials("rmtpdd");
  Rng rng(options.seed);
  detail::timed(report, [&] { phi_checks(rng, report.trials, report.checks); });
  detail::timed(report, [&] { checkerboard_checks(rng, report.trials, report.checks); });
  detail::timed(report, [&] { normalization_checks(rng, report.trials, report.checks); });
  return report;
}

}  // namespace shiftfact::verify

#include <benchmark/benchmark.h>

#include "shiftfact/apsum.hpp"
#include "shiftfact/detform.hpp"
#include "shiftfact/rmtpdd.hpp"
#include "shiftfact/sfact.hpp"
#include "shiftfact/triangular.hpp"

namespace {

using namespace shiftfact;

void BM_SfGeneral(benchmark::State& state) {
  const Complex z(1.3, -0.7), s(0.4, 0.9), t(2.6, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(sf_general(z, s, t));
}
BENCHMARK(BM_SfGeneral);

void BM_SfProductExact(benchmark::State& state) {
  const Rational z(7, 3), s(-2, 5);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sf_product(z, s, n));
}
BENCHMARK(BM_SfProductExact)->Arg(8)->Arg(32);

det::NodeSet<Complex> nodes(int n) {
  std::vector<Complex> z;
  for (int j = 0; j < n; ++j) z.emplace_back(0.37 * j + 0.21, 0.13 * j - 0.4);
  return det::NodeSet<Complex>(std::move(z));
}

det::DeterminantSpec<Complex> gamma_ratio_spec() {
  det::DeterminantSpec<Complex> spec;
  spec.kind = det::Kind::GammaRatio;
  spec.a = Complex(0.6, 0.2);
  spec.b = Complex(1.1, -0.3);
  return spec;
}

void BM_DetClosed(benchmark::State& state) {
  const auto spec = gamma_ratio_spec();
  const auto z = nodes(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det::det_closed(spec, z));
}
BENCHMARK(BM_DetClosed)->DenseRange(2, 8, 3);

void BM_DetOracleExtended(benchmark::State& state) {
  const auto spec = gamma_ratio_spec();
  const auto z = nodes(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det::det_oracle_extended(spec, z));
}
BENCHMARK(BM_DetOracleExtended)->DenseRange(2, 8, 3);

void BM_DetBareiss(benchmark::State& state) {
  det::DeterminantSpec<Rational> spec;
  spec.s = Rational(3, 4);
  std::vector<Rational> z;
  for (int j = 0; j < state.range(0); ++j) z.emplace_back(2 * j + 1, 3);
  const det::NodeSet<Rational> set(z);
  for (auto _ : state) benchmark::DoNotOptimize(det::det_oracle(det::build_matrix(spec, set)));
}
BENCHMARK(BM_DetBareiss)->DenseRange(2, 8, 3);

void BM_TriangularSides(benchmark::State& state) {
  det::TriangularParams<Complex> p;
  p.s = Complex(0.7, 0.4);
  p.c = Complex(0.3, -1.1);
  p.d = Complex(1.6, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(det::triangular_sides(det::TriangularKind::Lemma3Affine, p, 6, 6));
  }
}
BENCHMARK(BM_TriangularSides);

void BM_ApSum(benchmark::State& state) {
  const apsum::Args<Rational> x{Rational(1, 2), Rational(1, 3), Rational(1, 3), 8, 20};
  const auto method = state.range(0);
  for (auto _ : state) {
    if (method == 0) benchmark::DoNotOptimize(apsum::ap_sum_direct(x));
    if (method == 1) benchmark::DoNotOptimize(apsum::ap_sum_recurrence(x));
    if (method == 2) benchmark::DoNotOptimize(apsum::ap_sum_closed(x));
  }
  state.SetLabel(method == 0 ? "direct" : method == 1 ? "recurrence" : "closed");
}
BENCHMARK(BM_ApSum)->DenseRange(0, 2);

void BM_MellinClosed(benchmark::State& state) {
  const auto ens = rmt::laguerre(0.8, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rmt::mellin_closed(ens, Complex(2.3, 0.5), rmt::Parity::Plus));
}
BENCHMARK(BM_MellinClosed)->Arg(4)->Arg(16);

void BM_MellinQuadrature(benchmark::State& state) {
  const auto ens = rmt::laguerre(0.8, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rmt::mellin_quadrature(ens, 2.3, rmt::Parity::Plus));
}
BENCHMARK(BM_MellinQuadrature)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

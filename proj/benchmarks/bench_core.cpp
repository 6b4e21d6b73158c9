#include <benchmark/benchmark.h>

#include "p1z/charfun.hpp"
#include "p1z/sections.hpp"
#include "p1z/volume.hpp"
#include "p1z/zariski.hpp"

namespace {

void BM_Phi(benchmark::State& state) {
  const p1z::Params p(0.6, 0.6);
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p1z::phi(p, x));
    x = x < 0.9 ? x + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_Phi);

void BM_ThetaInterval(benchmark::State& state) {
  const p1z::Params p(0.6, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(p1z::theta_interval(p));
}
BENCHMARK(BM_ThetaInterval);

void BM_LatticeEstimate(benchmark::State& state) {
  const p1z::Params p(2, 2);
  const auto th = p1z::theta_interval(p);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p1z::volume_lattice_estimate(p, n, th));
}
BENCHMARK(BM_LatticeEstimate)->Arg(200)->Arg(2000)->Arg(20000);

void BM_VolumeQuadrature(benchmark::State& state) {
  const p1z::Params p(0.6, 0.6);
  const auto th = p1z::theta_interval(p);
  for (auto _ : state) benchmark::DoNotOptimize(p1z::volume_quadrature(p, th));
}
BENCHMARK(BM_VolumeQuadrature);

void BM_SectionSupNorm(benchmark::State& state) {
  const p1z::Params p(1, 1);
  const p1z::IntegerSection s{4, {1, -2, 3, 1, -1}};
  for (auto _ : state) benchmark::DoNotOptimize(p1z::section_sup_norm_sq(p, s));
}
BENCHMARK(BM_SectionSupNorm);

void BM_L2Count(benchmark::State& state) {
  const auto p = p1z::Params::exact(p1z::Rational(2), p1z::Rational(2));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p1z::h0_count(p, n, p1z::NormKind::L2));
}
BENCHMARK(BM_L2Count)->Arg(3)->Arg(4);

void BM_NefWitness(benchmark::State& state) {
  const p1z::Params p(0.6, 0.6);
  const auto d = p1z::positive_part(p, p1z::theta_interval(p));
  for (auto _ : state) benchmark::DoNotOptimize(p1z::nef_witness(p, d));
}
BENCHMARK(BM_NefWitness);

}  // namespace

BENCHMARK_MAIN();

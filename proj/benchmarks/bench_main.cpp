#include <benchmark/benchmark.h>

#include <cmath>

#include "fracineq/fracint.hpp"
#include "fracineq/hhbounds.hpp"
#include "fracineq/quadrature.hpp"
#include "fracineq/sweep.hpp"

using namespace fracineq;

namespace {

void BM_QuadSmooth(benchmark::State& state) {
  const Interval iv(0.0, 3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate([](double t) { return std::exp(-t) * std::cos(5.0 * t); },
                                       iv, 1e-12));
  }
}
BENCHMARK(BM_QuadSmooth);

void BM_QuadEndpointSingular(benchmark::State& state) {
  const Interval iv(0.0, 1.0);
  const Integrand f = Integrand::power_weighted([](double t) { return std::exp(t); },
                                                Endpoint::right, -0.75);
  for (auto _ : state) benchmark::DoNotOptimize(integrate(f, iv, 1e-12));
}
BENCHMARK(BM_QuadEndpointSingular);

void BM_LeftRL(benchmark::State& state) {
  const FracOrder alpha(static_cast<double>(state.range(0)) / 100.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(left_rl([](double t) { return std::exp(t); }, alpha, 0.0, 2.0));
  }
}
BENCHMARK(BM_LeftRL)->Arg(10)->Arg(50)->Arg(100)->Arg(250);

void BM_TrapezoidIdentity(benchmark::State& state) {
  const TestFunction f = make_curvature_power(0.5);
  const Interval iv(1.0, 3.0);
  const FracOrder alpha(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trapezoid_defect(f, iv, alpha).lhs);
    benchmark::DoNotOptimize(trapezoid_identity_rhs(f, iv, alpha));
  }
}
BENCHMARK(BM_TrapezoidIdentity);

void BM_Certify(benchmark::State& state) {
  const TestFunction f = make_curvature_power(0.5);
  const Interval iv(0.0, 4.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_curvature(f, iv, SExponent(0.5), 1.0, false).passed);
  }
}
BENCHMARK(BM_Certify);

void BM_DefaultSweep(benchmark::State& state) {
  const Catalog cat = builtin_catalog();
  const SweepConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(config, cat, {static_cast<unsigned>(state.range(0))}));
  }
}
BENCHMARK(BM_DefaultSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

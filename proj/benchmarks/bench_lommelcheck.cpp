#include <benchmark/benchmark.h>

#include "lommelcheck/bessel.hpp"
#include "lommelcheck/gamma.hpp"
#include "lommelcheck/hankel.hpp"
#include "lommelcheck/lommel.hpp"

using namespace lommelcheck;

static void BM_Gamma(benchmark::State& state) {
  const Complex w(3.7, -2.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lommelcheck::gamma(w));
  }
}
BENCHMARK(BM_Gamma);

static void BM_GammaReflected(benchmark::State& state) {
  const Complex w(-6.3, 1.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lommelcheck::gamma(w));
  }
}
BENCHMARK(BM_GammaReflected);

// |z| from the range argument
static void BM_Series(benchmark::State& state) {
  const Order nu(Complex(1.0, 0.5));
  const CutPlanePoint z(std::polar(static_cast<double>(state.range(0)), 0.6));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j_series(nu, z));
  }
}
BENCHMARK(BM_Series)->Arg(1)->Arg(5)->Arg(15)->Arg(30);

static void BM_Asymptotic(benchmark::State& state) {
  const Order nu(Complex(1.0, 0.5));
  const CutPlanePoint z(std::polar(static_cast<double>(state.range(0)), 0.6));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j_asymptotic(nu, z));
  }
}
BENCHMARK(BM_Asymptotic)->Arg(15)->Arg(30)->Arg(100)->Arg(1000);

static void BM_Deviation(benchmark::State& state) {
  const auto route = static_cast<DeviationRoute>(state.range(0));
  const CutPlanePoint z(40.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(deviation(Order(0.0), z, route));
  }
}
BENCHMARK(BM_Deviation)
    ->Arg(static_cast<int>(DeviationRoute::Bessel))
    ->Arg(static_cast<int>(DeviationRoute::LogScaled))
    ->Arg(static_cast<int>(DeviationRoute::Decomposition));

static void BM_Theorem1Check(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(theorem1_check(Order(1.0), 10.0, 1000.0, 400));
  }
}
BENCHMARK(BM_Theorem1Check)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

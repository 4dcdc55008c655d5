#include <benchmark/benchmark.h>

#include "turan/criteria.hpp"
#include "turan/density.hpp"
#include "turan/families.hpp"
#include "turan/scan.hpp"

namespace {

using namespace turan;

const CoefficientFamily& example3() {
  static const CoefficientFamily fam = build(FamilyKind::Example3, {{"a", Rational(1, 3)}});
  return fam;
}

void BM_EvalPolysDouble(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_polys<double>(example3(), n, 0.37));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalPolysDouble)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_EvalPolysRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_polys<Rational>(example3(), n, Rational(3, 7)));
  }
}
BENCHMARK(BM_EvalPolysRational)->RangeMultiplier(4)->Range(16, 256);

void BM_RatiosExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ratios_at_one<Rational>(example3(), n));
  }
}
BENCHMARK(BM_RatiosExact)->RangeMultiplier(2)->Range(50, 400);

void BM_Theorem1Exact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_theorem1(example3(), n));
  }
}
BENCHMARK(BM_Theorem1Exact)->Arg(100)->Arg(200)->Arg(1000);

void BM_RunCriteria(benchmark::State& state) {
  const auto fam = build(FamilyKind::Pollaczek, {{"lambda", Rational(1)}, {"a", Rational(1, 2)}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_criteria(fam, 200));
  }
}
BENCHMARK(BM_RunCriteria)->Unit(benchmark::kMillisecond);

void BM_GridScan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_scan(example3(), n, 2001, true));
  }
}
BENCHMARK(BM_GridScan)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_EstimateDensity(benchmark::State& state) {
  const auto fam = build(FamilyKind::Legendre);
  const auto xs = density_grid();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_density(fam, n, xs));
  }
}
BENCHMARK(BM_EstimateDensity)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

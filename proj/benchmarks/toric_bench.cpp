#include <benchmark/benchmark.h>

#include <random>

#include "toric/builders.hpp"
#include "toric/chow.hpp"
#include "toric/csm.hpp"

namespace {

using namespace toric;

IntegerMatrix random_matrix(std::size_t n, std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-20, 20);
  while (true) {
    IntegerMatrix m(n, d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = entry(rng);
    IntegerMatrix square(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) square(i, j) = m(i, j);
    if (determinant(square) != 0) return m;
  }
}

Fan product_fan(std::int64_t a, std::int64_t b) { return product(projective_space(a), projective_space(b)); }

void BM_HermiteNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntegerMatrix m = random_matrix(n, n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->DenseRange(2, 8, 2);

void BM_TallConeMultiplicity(benchmark::State& state) {
  const IntegerMatrix m = random_matrix(11, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(cone_multiplicity(m));
}
BENCHMARK(BM_TallConeMultiplicity)->Arg(3)->Arg(6)->Arg(11);

void BM_ChowPresentationProjective(benchmark::State& state) {
  const Fan fan = projective_space(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ChowPresentation::build(fan));
}
BENCHMARK(BM_ChowPresentationProjective)->Arg(6)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ChowPresentationProduct(benchmark::State& state) {
  const Fan fan = product_fan(5, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ChowPresentation::build(fan));
}
BENCHMARK(BM_ChowPresentationProduct)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CsmFastPath(benchmark::State& state) {
  const Fan fan = product_fan(5, state.range(0));
  const auto p = ChowPresentation::build(fan);
  for (auto _ : state) benchmark::DoNotOptimize(compute_csm(fan, p));
}
BENCHMARK(BM_CsmFastPath)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

// A fresh fan per iteration so every multiplicity goes through the
// Hermite form instead of the cache.
void BM_CsmForcedHermite(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    const Fan fan = product_fan(5, state.range(0));
    const auto p = ChowPresentation::build(fan);
    state.ResumeTiming();
    benchmark::DoNotOptimize(compute_csm(fan, p, CsmOptions{true, 1}));
  }
}
BENCHMARK(BM_CsmForcedHermite)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EulerOnly(benchmark::State& state) {
  const Fan fan = projective_space(static_cast<std::size_t>(state.range(0)));
  const auto p = ChowPresentation::build(fan);
  for (auto _ : state) benchmark::DoNotOptimize(euler_characteristic(fan, p, true));
}
BENCHMARK(BM_EulerOnly)->Arg(6)->Arg(16);

void BM_WeightedProjectiveCsm(benchmark::State& state) {
  const std::vector<std::int64_t> weights{1, 1, 2, 3};
  for (auto _ : state) {
    const Fan fan = weighted_projective(weights);
    benchmark::DoNotOptimize(compute_csm(fan, ChowPresentation::build(fan)));
  }
}
BENCHMARK(BM_WeightedProjectiveCsm);

}  // namespace

BENCHMARK_MAIN();

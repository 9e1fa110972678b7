#include <benchmark/benchmark.h>

#include "jordanum/constructions.hpp"
#include "jordanum/group.hpp"
#include "jordanum/permutation.hpp"

using namespace jordanum;

namespace {

void BM_CloseSymmetric(benchmark::State& st) {
  const auto gens = symmetric_generators(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(close(gens).order());
}
BENCHMARK(BM_CloseSymmetric)->Arg(4)->Arg(5)->Arg(6);

void BM_CloseRecipe(benchmark::State& st, WitnessRecipe (*make)()) {
  const auto r = make();
  for (auto _ : st) benchmark::DoNotOptimize(recipe_group(r).order());
}
BENCHMARK_CAPTURE(BM_CloseRecipe, a5, pgl3_a5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CloseRecipe, klein, pgl3_klein_descended)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CloseRecipe, a6, pgl3_a6)->Unit(benchmark::kMillisecond);

// Normal subgroups are cached per group, so each round closes afresh.
void BM_CloseAndNormalSubgroups(benchmark::State& st) {
  const auto r = hessian_tower()[2];
  for (auto _ : st) benchmark::DoNotOptimize(recipe_group(r).normal_subgroups().size());
}
BENCHMARK(BM_CloseAndNormalSubgroups)->Unit(benchmark::kMillisecond);

void BM_JordanBruteforce(benchmark::State& st) {
  const auto gens = symmetric_generators(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(jordan_bruteforce(close(gens).group));
}
BENCHMARK(BM_JordanBruteforce)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

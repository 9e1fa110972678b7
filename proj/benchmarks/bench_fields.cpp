#include <benchmark/benchmark.h>

#include "jordanum/field.hpp"
#include "jordanum/field_oracle.hpp"
#include "jordanum/jordan_laws.hpp"

using namespace jordanum;

namespace {

void BM_PropertyVector(benchmark::State& st) {
  const auto K = FieldDescriptor::abelian(st.range(0), {1});
  for (auto _ : st) benchmark::DoNotOptimize(property_vector(K));
}
BENCHMARK(BM_PropertyVector)->Arg(3)->Arg(15)->Arg(56)->Arg(105);

void BM_JordanAll(benchmark::State& st) {
  const auto K = compositum(cyclotomic_field(3), quadratic_field(Rational(5)));
  for (auto _ : st) {
    const auto p = property_vector(K);
    for (auto g : kAllAmbients) benchmark::DoNotOptimize(jordan(g, p).value);
  }
}
BENCHMARK(BM_JordanAll);

void BM_CyclicOrder7(benchmark::State& st) {
  const auto K = quadratic_field(Rational(-7));
  for (auto _ : st) benchmark::DoNotOptimize(pgl3_has_cyclic_of_order(K, 7).exists);
}
BENCHMARK(BM_CyclicOrder7);

}  // namespace

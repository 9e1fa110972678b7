#include <benchmark/benchmark.h>

#include "jordanum/cyclotomic.hpp"
#include "jordanum/matrix.hpp"

using namespace jordanum;

namespace {

CycElt dense(i64 level) {
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(level)));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = make_rational(static_cast<long>(k % 7) - 3, 1 + k % 3);
  return CycElt::from_coeffs(level, c);
}

void BM_CycMul(benchmark::State& st) {
  const i64 level = st.range(0);
  const CycElt a = dense(level), b = dense(level) + CycElt(1L);
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMul)->Arg(7)->Arg(15)->Arg(60)->Arg(120);

void BM_CycInverse(benchmark::State& st) {
  const CycElt a = dense(st.range(0)) + CycElt(2L);
  for (auto _ : st) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(BM_CycInverse)->Arg(7)->Arg(15)->Arg(60);

void BM_MatMul3(benchmark::State& st) {
  const CycElt z = CycElt::zeta(15);
  const ExactMatrix a{{z, CycElt(1L), CycElt(0L)}, {CycElt(0L), z * z, CycElt(1L)}, {CycElt(1L), CycElt(0L), z}};
  for (auto _ : st) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_MatMul3);

}  // namespace

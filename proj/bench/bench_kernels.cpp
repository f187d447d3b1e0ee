// Parallel group-ring product against its serial twin and the naive
// CyclotomicNumber triple loop, on products of Weil generator matrices.

#include <benchmark/benchmark.h>

#include "weil/kernels.hpp"
#include "weil/weilrep.hpp"

namespace {

using namespace weil;

// rho(S) rho(T) is dense with a single root of unity per entry; squaring it
// gives dense entries with many nonzero powers.
CycloMatrix dense_operand(std::int64_t m) {
  const DiscriminantForm df(m);
  const auto st = rho_S(df).matrix * rho_T(df).matrix;
  return st * st;
}

void BM_multiply_parallel(benchmark::State& state) {
  const auto a = kernels::to_ring(dense_operand(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply(a, a));
}

void BM_multiply_serial(benchmark::State& state) {
  const auto a = kernels::to_ring(dense_operand(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_serial(a, a));
}

void BM_multiply_reference(benchmark::State& state) {
  const auto a = dense_operand(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_reference(a, a));
}

void BM_reduce_parallel(benchmark::State& state) {
  const auto a = kernels::to_ring(dense_operand(state.range(0)));
  for (auto _ : state) {
    auto b = a;
    kernels::reduce(b);
    benchmark::DoNotOptimize(b);
  }
}

void BM_reduce_serial(benchmark::State& state) {
  const auto a = kernels::to_ring(dense_operand(state.range(0)));
  for (auto _ : state) {
    auto b = a;
    kernels::reduce_serial(b);
    benchmark::DoNotOptimize(b);
  }
}

}  // namespace

BENCHMARK(BM_multiply_parallel)->Arg(3)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_serial)->Arg(3)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_reference)->Arg(3)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reduce_parallel)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reduce_serial)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

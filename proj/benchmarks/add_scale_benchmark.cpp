// Algebraic (sparse) vs dense add and scale on the inputs the CLI bench uses.
// Arguments are (dim, support) with both operands sharing the support size.

#include <benchmark/benchmark.h>

#include "algvec/bench.hpp"
#include "algvec/dense.hpp"
#include "algvec/vector.hpp"

namespace {

using namespace algvec;

bench::ScenarioInputs inputs_for(const benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto support = static_cast<std::size_t>(state.range(1));
  return bench::make_inputs({dim, support, support, 0.5, 1, 42});
}

void BM_AlgebraicAdd(benchmark::State& state) {
  const auto [a, b] = inputs_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(add(a, b));
}

void BM_DenseAdd(benchmark::State& state) {
  const auto [a, b] = inputs_for(state);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto da = to_dense(a, dim);
  const auto db = to_dense(b, dim);
  for (auto _ : state) benchmark::DoNotOptimize(dense_add(da, db));
}

void BM_AlgebraicScale(benchmark::State& state) {
  const auto [a, b] = inputs_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(scalar_mul(bench::scale_factor(), a));
}

void BM_DenseScale(benchmark::State& state) {
  const auto [a, b] = inputs_for(state);
  const auto da = to_dense(a, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dense_scalar_mul(bench::scale_factor(), da));
}

void sweep(benchmark::internal::Benchmark* b) {
  for (std::int64_t dim : {100, 10'000, 1'000'000})
    for (std::int64_t support : {3, 10, 100})
      if (support * 3 / 2 <= dim) b->Args({dim, support});
  b->ArgNames({"dim", "support"})->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK(BM_AlgebraicAdd)->Apply(sweep);
BENCHMARK(BM_DenseAdd)->Apply(sweep);
BENCHMARK(BM_AlgebraicScale)->Apply(sweep);
BENCHMARK(BM_DenseScale)->Apply(sweep);
BENCHMARK_MAIN();

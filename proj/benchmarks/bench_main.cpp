// Microbenchmarks for the exact-arithmetic hot paths.  More cases are added
// as the corresponding modules land.
#include <benchmark/benchmark.h>

#include "atlas/rng.hpp"
#include "atlas/scalar.hpp"

namespace {

void BM_scalar_mul(benchmark::State& state) {
    atlas::Rng rng(7);
    atlas::ExtScalar x = rng.next_scalar();
    atlas::ExtScalar y = rng.next_scalar();
    for (auto _ : state) {
        atlas::ExtScalar z = x * y;
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_scalar_mul);

void BM_scalar_inverse(benchmark::State& state) {
    atlas::Rng rng(7);
    atlas::ExtScalar x = rng.next_nonzero_scalar();
    for (auto _ : state) {
        atlas::ExtScalar z = x.inverse();
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_scalar_inverse);

}  // namespace

BENCHMARK_MAIN();

#include <dualramsey/devlin.hpp>
#include <dualramsey/random.hpp>

#include <benchmark/benchmark.h>

using namespace dualramsey;

static void BM_TangentTable(benchmark::State& state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tangent_table(n));
    }
}
BENCHMARK(BM_TangentTable)->Arg(16)->Arg(64)->Arg(256);

static void BM_EnumerateTypes(benchmark::State& state)
{
    const auto l = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_types(l));
    }
}
BENCHMARK(BM_EnumerateTypes)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_BoundaryTuple(benchmark::State& state)
{
    const auto d = static_cast<unsigned>(state.range(0));
    Rng rng(1);
    const Surjection f = random_surjection(rng, 2, 3);
    for (auto _ : state) {
        // fresh copy so the level cache is cold
        const Surjection g = Surjection::from_filtering(f.filtering());
        benchmark::DoNotOptimize(g.boundary_tuple(d));
    }
}
BENCHMARK(BM_BoundaryTuple)->DenseRange(4, 12, 4);

static void BM_DistanceChain(benchmark::State& state)
{
    Rng rng(2);
    const Surjection f = random_surjection(rng, 2, 2);
    const Surjection h = random_surjection(rng, 2, 2);
    const Surjection fh = compose(f, h);
    const Surjection g = truncate(fh, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance(fh, g, 64, 4096));
    }
}
BENCHMARK(BM_DistanceChain)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

static void BM_SearchTypes(benchmark::State& state)
{
    const auto l = static_cast<unsigned>(state.range(0));
    const Surjection id = Surjection::identity(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_types(id, l, 16));
    }
}
BENCHMARK(BM_SearchTypes)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

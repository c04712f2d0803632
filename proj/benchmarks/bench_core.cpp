#include <benchmark/benchmark.h>

#include "gasolve/engine.hpp"
#include "gasolve/objective.hpp"
#include "gasolve/oracle.hpp"
#include "gasolve/selection.hpp"

namespace {

using namespace gasolve;

const LinearEqualityObjective kInstance({1, 2, 3, 4}, 30);

void BM_EvaluateChromosome(benchmark::State& state) {
    const Chromosome chrom{12, 5, 23, 8};
    for (auto _ : state) {
        benchmark::DoNotOptimize(kInstance.evaluate(chrom));
    }
}
BENCHMARK(BM_EvaluateChromosome);

void BM_SelectionTable(benchmark::State& state) {
    const std::vector<std::int64_t> costs{93, 80, 83, 46, 94, 55};
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_selection_table(costs));
    }
}
BENCHMARK(BM_SelectionTable);

void BM_EngineRun(benchmark::State& state) {
    GaConfig config;
    config.generations = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SeededSource src(42);
        benchmark::DoNotOptimize(run(config, kInstance, src));
    }
}
BENCHMARK(BM_EngineRun)->Arg(10)->Arg(50)->Arg(200);

void BM_EnumerateSolutions(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_solutions(kInstance, {0, 30}, 4));
    }
}
BENCHMARK(BM_EnumerateSolutions);

} // namespace

BENCHMARK_MAIN();

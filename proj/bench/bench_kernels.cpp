// Serial reference vs OpenMP for the two data-parallel kernels: the
// candidate-quantum scan and the workload sweep.
#include "ctq/analytic.hpp"
#include "ctq/experiment.hpp"
#include "ctq/workload.hpp"

#include <benchmark/benchmark.h>

namespace {

std::vector<ctq::Tu> bursts_for(std::int64_t n, ctq::Tu max_burst)
{
    return ctq::generate(ctq::WorkloadSpec{.n = n, .burst_min = 1, .burst_max = max_burst, .seed = 12})
        .bursts();
}

void BM_BestTqSerial(benchmark::State& state)
{
    const auto b = bursts_for(state.range(0), 500);
    for (auto _ : state)
        benchmark::DoNotOptimize(ctq::best_tq_serial(b));
}

void BM_BestTqParallel(benchmark::State& state)
{
    const auto b = bursts_for(state.range(0), 500);
    for (auto _ : state)
        benchmark::DoNotOptimize(ctq::best_tq_parallel(b));
}

void BM_SweepSerial(benchmark::State& state)
{
    const auto workloads = ctq::generate_batch(
        ctq::WorkloadSpec{.n = state.range(0), .burst_min = 1, .burst_max = 500, .seed = 3}, 30);
    for (auto _ : state)
        benchmark::DoNotOptimize(ctq::evaluate_all_serial(workloads));
}

void BM_SweepParallel(benchmark::State& state)
{
    const auto workloads = ctq::generate_batch(
        ctq::WorkloadSpec{.n = state.range(0), .burst_min = 1, .burst_max = 500, .seed = 3}, 30);
    for (auto _ : state)
        benchmark::DoNotOptimize(ctq::evaluate_all(workloads));
}

} // namespace

BENCHMARK(BM_BestTqSerial)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BestTqParallel)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SweepSerial)->Arg(5)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(5)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

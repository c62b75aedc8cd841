#include <benchmark/benchmark.h>

#include <cmath>

#include "specrec/specrec.hpp"

using namespace specrec;

namespace {

SpectralProblem example_problem(Index horizon) { return numdiff_problem(4.0, horizon); }

void BM_WorstCaseError(benchmark::State& state) {
    const auto p = example_problem(1 << 14);
    const double delta = 1e-6;
    const Index n = p.threshold_index(delta);
    for (auto _ : state) {
        benchmark::DoNotOptimize(worst_case_error(p, delta, n).total);
    }
}
BENCHMARK(BM_WorstCaseError);

void BM_ThresholdScan(benchmark::State& state) {
    const auto p = example_problem(1 << 14);
    const double delta = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(p.threshold_index(delta));
    }
}
BENCHMARK(BM_ThresholdScan)->Arg(2)->Arg(6)->Arg(10);

void BM_BruteForceOracle(benchmark::State& state) {
    const auto p = example_problem(static_cast<Index>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            brute_force_worst_case(p, 1e-4, 10, p.horizon(), 32, 1).value);
    }
}
BENCHMARK(BM_BruteForceOracle)->Arg(64)->Arg(512)->Arg(4096);

void BM_RandomAttacks(benchmark::State& state) {
    const auto p = example_problem(1024);
    for (auto _ : state) {
        benchmark::DoNotOptimize(random_attack(p, 1e-3, 6, 256, 42).size());
    }
}
BENCHMARK(BM_RandomAttacks);

void BM_Analyze(benchmark::State& state) {
    auto grid = make_periodic_grid(static_cast<Index>(state.range(0)));
    for (Index j = 0; j < grid.size(); ++j) {
        grid.samples[j] = std::sin(grid.x(j)) + 0.3 * std::cos(5.0 * grid.x(j));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze(grid).support_size());
    }
}
BENCHMARK(BM_Analyze)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14);

void BM_CertifyConstants(benchmark::State& state) {
    const auto p = example_problem(1 << 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify_constants(p, 4096).c2);
    }
}
BENCHMARK(BM_CertifyConstants);

}  // namespace

BENCHMARK_MAIN();

#include <cubeslice/certifier.hpp>
#include <cubeslice/exact_volume.hpp>
#include <cubeslice/interval.hpp>
#include <cubeslice/xt_pipeline.hpp>

#include <benchmark/benchmark.h>

using cubeslice::Interval;

static void BM_IntervalMul(benchmark::State& state) {
    Interval a(-1.25, 3.5), b(0.75, 2.0);
    for (auto _ : state) {
        a = a * b;
        a = a / b;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_IntervalMul);

static void BM_IntervalExp(benchmark::State& state) {
    const Interval a(0.5, 0.5001);
    for (auto _ : state) benchmark::DoNotOptimize(cubeslice::exp(a));
}
BENCHMARK(BM_IntervalExp);

static void BM_IntervalSin(benchmark::State& state) {
    const Interval a(1.0, 1.0001);
    for (auto _ : state) benchmark::DoNotOptimize(cubeslice::sin(a));
}
BENCHMARK(BM_IntervalSin);

static void BM_SchemeOnePiece(benchmark::State& state) {
    const cubeslice::PipelineConfig cfg;
    const Interval piece(0.7, 0.7005);
    for (auto _ : state) {
        const auto x = cubeslice::x_series_scheme(piece, cfg);
        benchmark::DoNotOptimize(cubeslice::invert(x, piece));
    }
}
BENCHMARK(BM_SchemeOnePiece);

static void BM_CoarseSweep(benchmark::State& state) {
    cubeslice::PipelineConfig cfg;
    cfg.subdiv_width = 0.01;
    cfg.jobs = 1;
    for (auto _ : state) benchmark::DoNotOptimize(cubeslice::sweep(cfg).R());
}
BENCHMARK(BM_CoarseSweep)->Unit(benchmark::kMillisecond);

static void BM_QVolume(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cubeslice::q_volume(n));
}
BENCHMARK(BM_QVolume)->Arg(50)->Arg(145)->Arg(200);

static void BM_FindN0(benchmark::State& state) {
    const auto p = cubeslice::GapBoundParams::with_R(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(cubeslice::find_n0(p, 160).n0);
}
BENCHMARK(BM_FindN0);
BENCHMARK_MAIN();

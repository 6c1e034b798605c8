// Serial reference vs OpenMP kernels. Arg 0 selects Exec::Serial, arg 1 Exec::Parallel.
#include <benchmark/benchmark.h>

#include "lwl/counting.hpp"
#include "lwl/fragmentation.hpp"
#include "lwl/io.hpp"
#include "lwl/local_wl.hpp"
#include "lwl/pattern.hpp"
#include "lwl/wl.hpp"

namespace {

using lwl::Exec;

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

const lwl::Graph& dense_sample() {
    static const lwl::Graph g = lwl::io::gen_random(60, 0.15, 11);
    return g;
}

const lwl::Graph& sparse_sample() {
    static const lwl::Graph g = lwl::io::gen_random(400, 0.05, 12);
    return g;
}

void BM_count_pattern_paw(benchmark::State& state) {
    const auto& g = dense_sample();
    const auto paw = lwl::find_pattern("paw");
    for (auto _ : state) benchmark::DoNotOptimize(lwl::count_pattern(g, paw, lwl::CountMode::Induced, exec_of(state)));
}

void BM_count_pattern_c4(benchmark::State& state) {
    const auto& g = dense_sample();
    const auto c4 = lwl::find_pattern("c4");
    for (auto _ : state) benchmark::DoNotOptimize(lwl::count_pattern(g, c4, lwl::CountMode::Subgraph, exec_of(state)));
}

void BM_local_kwl(benchmark::State& state) {
    const auto& g = dense_sample();
    lwl::RefineOptions options;
    options.exec = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(lwl::local_kwl(g, 2, 1, options));
}

void BM_refine_2wl(benchmark::State& state) {
    const auto& g = dense_sample();
    lwl::RefineOptions options;
    options.exec = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(lwl::refine_kwl(g, 2, options));
}

void BM_ind_count_le4(benchmark::State& state) {
    const auto& g = sparse_sample();
    for (auto _ : state) benchmark::DoNotOptimize(lwl::ind_count_le4(g, exec_of(state)));
}

void BM_count_triangles_fast(benchmark::State& state) {
    const auto& g = sparse_sample();
    for (auto _ : state) benchmark::DoNotOptimize(lwl::count_triangles_fast(g, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_count_pattern_paw)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_pattern_c4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_local_kwl)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_refine_2wl)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ind_count_le4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_triangles_fast)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();

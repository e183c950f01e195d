#include <benchmark/benchmark.h>

#include "vulnet/generators.hpp"
#include "vulnet/ilp.hpp"
#include "vulnet/matching.hpp"
#include "vulnet/shapley.hpp"
#include "vulnet/spectral.hpp"
#include "vulnet/vulnerability.hpp"

using namespace vulnet;

static void bm_two_matching_number(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = erdos_renyi_mean_degree(n, 6.0, 7, 0);
    for (auto _ : state) benchmark::DoNotOptimize(two_matching_number(g));
    state.SetComplexityN(n);
}
BENCHMARK(bm_two_matching_number)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void bm_classify(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = barabasi_albert(n, 3, 11, 0);
    for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(bm_classify)->RangeMultiplier(4)->Range(64, 16384);

static void bm_vulnerability_nonnegative(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = barabasi_albert(n, 2, 13, 0); // hubs keep these graphs vulnerable
    for (auto _ : state) benchmark::DoNotOptimize(network_vulnerability(g));
}
BENCHMARK(bm_vulnerability_nonnegative)->RangeMultiplier(4)->Range(64, 4096);

static void bm_vulnerability_bnb(benchmark::State& state) {
    // dense ER graphs classify regularizable and go through branch and bound
    int n = static_cast<int>(state.range(0));
    Graph g = erdos_renyi(n, 0.5, 17, 0);
    for (auto _ : state) benchmark::DoNotOptimize(network_vulnerability(g));
}
BENCHMARK(bm_vulnerability_bnb)->RangeMultiplier(2)->Range(16, 128);

static void bm_shapley_p(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = erdos_renyi_mean_degree(n, 8.0, 19, 0);
    for (auto _ : state) benchmark::DoNotOptimize(shapley_power(g, Measure::p));
    state.SetComplexityN(n);
}
BENCHMARK(bm_shapley_p)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void bm_lambda2(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = erdos_renyi_mean_degree(n, 6.0, 23, 0);
    for (auto _ : state) benchmark::DoNotOptimize(algebraic_connectivity(g));
}
BENCHMARK(bm_lambda2)->RangeMultiplier(2)->Range(32, 512);

static void bm_lp_relaxation(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = erdos_renyi_mean_degree(n, 3.0, 29, 0);
    auto m = build_model(g);
    for (auto _ : state) benchmark::DoNotOptimize(solve_relaxation(m));
}
BENCHMARK(bm_lp_relaxation)->DenseRange(4, 12, 4);

BENCHMARK_MAIN();

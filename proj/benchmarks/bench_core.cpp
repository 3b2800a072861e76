#include <benchmark/benchmark.h>

#include <random>

#include "distspec/canonical.hpp"
#include "distspec/charpoly.hpp"
#include "distspec/distance.hpp"
#include "distspec/enumerate.hpp"
#include "distspec/jacobi.hpp"
#include "distspec/random_graphs.hpp"

using namespace distspec;

namespace {

Graph fixture_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_connected_graph(rng, n, p);
}

void BM_distance_matrix(benchmark::State& state) {
    const Graph g = fixture_graph(static_cast<int>(state.range(0)), 0.25, 1);
    for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(g));
}
BENCHMARK(BM_distance_matrix)->Arg(16)->Arg(32)->Arg(62);

void BM_char_poly(benchmark::State& state) {
    const auto d = distance_matrix(fixture_graph(static_cast<int>(state.range(0)), 0.3, 2));
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(d));
}
BENCHMARK(BM_char_poly)->Arg(8)->Arg(12)->Arg(20);

void BM_canonical_form(benchmark::State& state) {
    const Graph g = fixture_graph(static_cast<int>(state.range(0)), 0.4, 3);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_canonical_form)->Arg(8)->Arg(10);

void BM_canonical_form_complete(benchmark::State& state) {
    const Graph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_canonical_form_complete)->Arg(8)->Arg(10);

void BM_eigen_decomposition(benchmark::State& state) {
    const RealMatrix m = RealMatrix::from(distance_matrix(fixture_graph(static_cast<int>(state.range(0)), 0.3, 4)));
    for (auto _ : state) benchmark::DoNotOptimize(eigen_decomposition(m));
}
BENCHMARK(BM_eigen_decomposition)->Arg(10)->Arg(20);

void BM_connected_graphs(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(connected_graphs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_connected_graphs)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

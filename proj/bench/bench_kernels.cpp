// Serial reference kernels against their OpenMP counterparts.
//   ./bench_kernels --benchmark_filter=Cliques

#include "graphtda/kernels.hpp"
#include "graphtda/persistence.hpp"
#include "support.hpp"

#include <benchmark/benchmark.h>

using namespace graphtda;

namespace {

WeightedGraph fixture(std::size_t n, double p)
{
    std::mt19937_64 rng(n * 7919 + static_cast<std::size_t>(p * 1000));
    return testing_support::random_real_graph(rng, n, p);
}

kernels::AdjacencyLists adjacency(WeightedGraph const& g)
{
    kernels::AdjacencyLists out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    return out;
}

Execution mode(benchmark::State const& state)
{
    return state.range(1) ? Execution::parallel : Execution::serial;
}

void Cliques(benchmark::State& state)
{
    auto adj = adjacency(fixture(static_cast<std::size_t>(state.range(0)), 0.5));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::maximal_cliques(adj, mode(state)));
}
BENCHMARK(Cliques)->ArgsProduct({{60, 90, 120}, {0, 1}})->Unit(benchmark::kMillisecond);

void Enclaveless(benchmark::State& state)
{
    auto g = fixture(static_cast<std::size_t>(state.range(0)), 0.3);
    std::vector<std::uint64_t> nb;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        nb.push_back(g.closed_neighborhood_mask(v));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::enclaveless_sets(nb, g.vertex_count(), mode(state)));
}
BENCHMARK(Enclaveless)->ArgsProduct({{14, 17, 20}, {0, 1}})->Unit(benchmark::kMillisecond);

void NeighborhoodValues(benchmark::State& state)
{
    auto g = fixture(static_cast<std::size_t>(state.range(0)), 0.35);
    for (auto _ : state)
        benchmark::DoNotOptimize(filter_neighborhood(g, 3, mode(state)));
}
BENCHMARK(NeighborhoodValues)->ArgsProduct({{20, 30}, {0, 1}})->Unit(benchmark::kMillisecond);

void ExtendedGridSampling(benchmark::State& state)
{
    auto g = fixture(static_cast<std::size_t>(state.range(0)), 0.5);
    ExtendedPersistence ext(extended_pair(g, 2), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_extended_grid(ext, 0, mode(state)));
}
BENCHMARK(ExtendedGridSampling)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

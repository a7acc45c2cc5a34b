#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "svcfc/coloring.hpp"
#include "svcfc/generator.hpp"
#include "svcfc/graph.hpp"
#include "svcfc/kernel.hpp"
#include "svcfc/solver.hpp"
#include "svcfc/twins.hpp"

namespace {

svcfc::Graph grid_graph(int rows, int cols) {
    std::vector<std::pair<int, int>> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows)
                edges.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return svcfc::Graph(rows * cols, edges);
}

svcfc::Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<double>(rng() >> 11) < p * 9007199254740992.0)
                edges.emplace_back(i, j);
    return svcfc::Graph(n, edges);
}

void BM_KernelizeAnnotated(benchmark::State& state) {
    int cliques = static_cast<int>(state.range(0));
    svcfc::GeneratedInstance inst =
        svcfc::generate_instance({2, {{{0, 1}, 1, cliques}, {{0}, 2, cliques}}, 11, 1.0});
    for (auto _ : state) {
        svcfc::KernelReport report =
            svcfc::kernelize_annotated(svcfc::AnnotatedInstance{inst.g, 2, inst.x});
        benchmark::DoNotOptimize(report.realized);
    }
    state.SetComplexityN(cliques);
}
BENCHMARK(BM_KernelizeAnnotated)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_ApproxTwinCover(benchmark::State& state) {
    svcfc::Graph g = random_graph(static_cast<int>(state.range(0)), 0.1, 3);
    for (auto _ : state) {
        svcfc::TwinCover cover = svcfc::approx_twin_cover(g);
        benchmark::DoNotOptimize(cover.size());
    }
}
BENCHMARK(BM_ApproxTwinCover)->RangeMultiplier(2)->Range(32, 512);

void BM_EnumerateShortestPaths(benchmark::State& state) {
    int side = static_cast<int>(state.range(0));
    svcfc::Graph g = grid_graph(side, side);
    for (auto _ : state) {
        auto en = svcfc::enumerate_shortest_paths(g, 0, side * side - 1, 1000000);
        benchmark::DoNotOptimize(en.paths.size());
    }
}
BENCHMARK(BM_EnumerateShortestPaths)->DenseRange(3, 7);

void BM_SvcfcDecide(benchmark::State& state) {
    int cliques = static_cast<int>(state.range(0));
    svcfc::GeneratedInstance inst =
        svcfc::generate_instance({3, {{{0, 1}, 2, cliques}, {{2}, 1, cliques}}, 21, 0.6});
    for (auto _ : state) {
        svcfc::DecideResult r = svcfc::svcfc_decide(inst.g, 3);
        benchmark::DoNotOptimize(r.satisfiable);
    }
}
BENCHMARK(BM_SvcfcDecide)->RangeMultiplier(2)->Range(2, 8);

void BM_ChromaticNumber(benchmark::State& state) {
    svcfc::Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 9);
    for (auto _ : state) {
        auto r = svcfc::chromatic_number_exact(g);
        benchmark::DoNotOptimize(r.chi);
    }
}
BENCHMARK(BM_ChromaticNumber)->DenseRange(10, 16, 2);

} // namespace

BENCHMARK_MAIN();

#include "cleangraph/fixtures.hpp"
#include "cleangraph/io.hpp"
#include "cleangraph/recognizers.hpp"
#include "cleangraph/simplicial.hpp"

#include <benchmark/benchmark.h>

using namespace cleangraph;

namespace {

// Unit interval graphs are chordal, so phase 1 answers immediately; this
// measures the vertex scan.
void BM_FindUnitInterval(benchmark::State& state) {
    Graph g = random_unit_interval(int(state.range(0)), 0.3, 0);
    for (auto _ : state) benchmark::DoNotOptimize(find_simplicial_clique(g));
}
BENCHMARK(BM_FindUnitInterval)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

// Cycle squares have no simplicial clique anywhere, forcing both phases to
// run to exhaustion; this measures the full candidate scan.
void BM_FindExhaustiveCycleSquare(benchmark::State& state) {
    Graph g = cycle_square(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_simplicial_clique(g));
}
BENCHMARK(BM_FindExhaustiveCycleSquare)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

// Dense random graphs rarely admit a simplicial clique and carry large
// common neighbourhoods, the worst case for the dome checks.
void BM_FindExhaustiveDense(benchmark::State& state) {
    Graph g = random_graph(int(state.range(0)), 0.5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(find_simplicial_clique(g));
}
BENCHMARK(BM_FindExhaustiveDense)->Arg(25)->Arg(50)->Arg(100);

void BM_Dome(benchmark::State& state) {
    Graph g = complement_cycle(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dome(g, 0, 2));
}
BENCHMARK(BM_Dome)->Arg(101)->Arg(201)->Arg(401);

void BM_CollectHoles(benchmark::State& state) {
    Graph g = random_graph(int(state.range(0)), 0.15, 3);
    HoleEnumOptions options;
    options.max_length = 8;
    for (auto _ : state) benchmark::DoNotOptimize(collect_holes(g, options));
}
BENCHMARK(BM_CollectHoles)->Arg(20)->Arg(30);

void BM_Graph6RoundTrip(benchmark::State& state) {
    Graph g = random_graph(int(state.range(0)), 0.1, 5);
    for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(emit_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "qgw/classical.hpp"
#include "qgw/quantizer.hpp"
#include "qgw/solver.hpp"
#include "qgw/stable_graph.hpp"

using namespace qgw;

namespace {

const MirrorData& mirror(int order) {
    static std::map<int, MirrorData> cache;
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, build_mirror(order)).first;
    return it->second;
}

void series_multiply(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const QSeries& a = mirror(order).I0;
    const QSeries& b = mirror(order).X;
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(series_multiply)->Arg(20)->Arg(40)->Arg(80);

void mirror_construction(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_mirror(order));
}
BENCHMARK(mirror_construction)->Arg(12)->Arg(30)->Unit(benchmark::kMillisecond);

void graph_enumeration(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_seeded(g, 0, 1));
}
BENCHMARK(graph_enumeration)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void genus_two_solve(benchmark::State& state) {
    const MirrorData& md = mirror(16);
    const ClassicalData cl = ClassicalData::from_mirror(md);
    for (auto _ : state) {
        VertexTable t = VertexTable::genus_zero(md, 3);
        solve_genus(1, Gauge::special(), md, t, cl);
        benchmark::DoNotOptimize(solve_genus(2, Gauge::special(), md, t, cl));
    }
}
BENCHMARK(genus_two_solve)->Unit(benchmark::kMillisecond);

void quantizer_genus_two(benchmark::State& state) {
    const MirrorData& md = mirror(12);
    const ClassicalData cl = ClassicalData::from_mirror(md);
    VertexTable t = VertexTable::genus_zero(md, 3);
    solve_genus(1, Gauge::special(), md, t, cl, 0);
    solve_genus(2, Gauge::special(), md, t, cl, 0);
    const int W = 4;
    t.extend(0, W + 2, md);
    t.extend(1, W, md);
    t.extend(2, W - 2, md);
    const PropagatorSet props = PropagatorSet::make(Gauge::special(), md);
    const MultiSeries PB = build_PB(2, W, t, md);
    for (auto _ : state) benchmark::DoNotOptimize(quantize(PB, props));
}
BENCHMARK(quantizer_genus_two)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

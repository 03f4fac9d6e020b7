// Microbenchmarks for the hot paths: graph construction, common-neighbour
// queries, the recovery procedures, and the polar-space reconstruction.

#include <benchmark/benchmark.h>

#include "antiflag/hyperbolic.hpp"
#include "antiflag/recovery.hpp"

using namespace antiflag;

namespace {

struct Setup {
    Field f;
    ProjectiveSpace pg;
    AntiFlagSpace afs;
    Setup(int n, int q) : f(q), pg(f, n), afs(pg) {}
};

void BM_BuildAllGraphs(benchmark::State& state) {
    Setup s(int(state.range(0)), int(state.range(1)));
    for (auto _ : state) {
        auto gs = build_all_graphs(s.afs);
        benchmark::DoNotOptimize(gs[0].num_edges());
    }
}
BENCHMARK(BM_BuildAllGraphs)->Args({3, 3})->Args({3, 4})->Args({4, 2});

void BM_CommonNeighbours(benchmark::State& state) {
    Setup s(3, 4);
    RelGraph g1 = build_graph(1, s.afs);
    int a = 0, b = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(common_related(g1, a, b).count());
        if (++b >= g1.num_vertices()) b = ++a + 1;
        if (a >= g1.num_vertices() - 1) a = 0, b = 1;
    }
}
BENCHMARK(BM_CommonNeighbours);

void BM_GroundTruth(benchmark::State& state) {
    Setup s(3, 4);
    for (auto _ : state) {
        PairLabeling gt = ground_truth(s.afs);
        benchmark::DoNotOptimize(gt.count(Relation::r4));
    }
}
BENCHMARK(BM_GroundTruth);

void BM_RecoverFrom3(benchmark::State& state) {
    Setup s(int(state.range(0)), int(state.range(1)));
    RelGraph g3 = build_graph(3, s.afs);
    for (auto _ : state) {
        PairLabeling rec = recover_from_3(g3);
        benchmark::DoNotOptimize(rec.count(Relation::r1));
    }
}
BENCHMARK(BM_RecoverFrom3)->Args({3, 3})->Args({3, 4});

void BM_RecoverFrom4(benchmark::State& state) {
    Setup s(int(state.range(0)), int(state.range(1)));
    RelGraph g4 = build_graph(4, s.afs);
    for (auto _ : state) {
        PairLabeling rec = recover_from_4(g4);
        benchmark::DoNotOptimize(rec.count(Relation::r2));
    }
}
BENCHMARK(BM_RecoverFrom4)->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_RecoverFrom2(benchmark::State& state) {
    Setup s(3, 3);
    RelGraph g2 = build_graph(2, s.afs);
    for (auto _ : state) {
        PairLabeling rec = recover_from_2(g2);
        benchmark::DoNotOptimize(rec.count(Relation::r3));
    }
}
BENCHMARK(BM_RecoverFrom2)->Unit(benchmark::kMillisecond);

void BM_Reconstruct(benchmark::State& state) {
    Setup s(int(state.range(0)), 2);
    RelGraph g1 = build_graph(1, s.afs);
    for (auto _ : state) {
        ReconstructedGeometry rec = reconstruct_polar_space(g1);
        benchmark::DoNotOptimize(rec.num_classes);
    }
}
BENCHMARK(BM_Reconstruct)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "odg/builders.hpp"
#include "odg/solve.hpp"

using namespace odg;
using namespace odg::build;
using namespace odg::chroma;

static void BM_EncodeG306(benchmark::State & state)
{
    OddGraph g = g306(ConstructionParams{8, 3, 8, 3, 7, 1});
    for (auto _ : state) {
        CnfInstance inst = encode(g, 6);
        benchmark::DoNotOptimize(inst.clauses.size());
    }
}
BENCHMARK(BM_EncodeG306);

static void BM_ChiRotor(benchmark::State & state)
{
    OddGraph r = rotor(8, 3);
    for (auto _ : state) {
        ChiResult res = chi_exact(r);
        benchmark::DoNotOptimize(res.chi);
    }
}
BENCHMARK(BM_ChiRotor);

static void BM_SolveG306Sat(benchmark::State & state)
{
    OddGraph g = g306(ConstructionParams{8, 3, 8, 3, 7, 1});
    CnfInstance inst = encode(g, 6);
    for (auto _ : state) {
        SolveOutcome out = solve_internal(inst);
        benchmark::DoNotOptimize(out.kind);
    }
}
BENCHMARK(BM_SolveG306Sat);

static void BM_DecideRotorUnsat(benchmark::State & state)
{
    OddGraph r = rotor(8, 3);
    auto edges = edge_pairs(r);
    for (auto _ : state) {
        SolveOutcome out = decide_colorable(r.size(), edges, 2);
        benchmark::DoNotOptimize(out.kind);
    }
}
BENCHMARK(BM_DecideRotorUnsat);

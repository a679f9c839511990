#include <benchmark/benchmark.h>

#include "odg/builders.hpp"

using namespace odg;
using namespace odg::build;

static void BM_FieldMul(benchmark::State & state)
{
    FieldElement x(Rational(7, 3), Rational(-2, 5), Rational(1, 2), Rational(3, 7), 23);
    FieldElement y(Rational(-1, 9), Rational(4, 3), Rational(2, 11), Rational(-5, 2), 23);
    for (auto _ : state) {
        FieldElement z = x * y;
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_FieldMul);

static void BM_FieldSign(benchmark::State & state)
{
    // both conjugate halves active, forcing the squaring comparison
    FieldElement x(Rational(70001, 3), Rational(-2), Rational(-8400, 7), Rational(1, 3), 23);
    for (auto _ : state)
        benchmark::DoNotOptimize(x.sign());
}
BENCHMARK(BM_FieldSign);

static void BM_MinkowskiPower(benchmark::State & state)
{
    OddGraph h = make_h();
    for (auto _ : state) {
        OddGraph g = geom::minkowski_power(h, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(g.size());
    }
}
BENCHMARK(BM_MinkowskiPower)->Arg(4)->Arg(8);

static void BM_BuildG306(benchmark::State & state)
{
    ConstructionParams p{8, 3, 8, 3, 7, 1};
    for (auto _ : state) {
        OddGraph g = g306(p);
        benchmark::DoNotOptimize(g.size());
    }
}
BENCHMARK(BM_BuildG306);

static void BM_DetectEdgesG306(benchmark::State & state)
{
    OddGraph g = g306(ConstructionParams{8, 3, 8, 3, 7, 1});
    bool prefilter = state.range(0) != 0;
    for (auto _ : state) {
        auto edges = g.detect_edges({prefilter});
        benchmark::DoNotOptimize(edges.size());
    }
}
BENCHMARK(BM_DetectEdgesG306)->Arg(0)->Arg(1);

static void BM_PairsAtDistance(benchmark::State & state)
{
    OddGraph g = g2035();
    for (auto _ : state) {
        auto pairs = g.pairs_at_distance(Rational(5));
        benchmark::DoNotOptimize(pairs.size());
    }
}
BENCHMARK(BM_PairsAtDistance);

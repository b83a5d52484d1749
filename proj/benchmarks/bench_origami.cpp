#include <benchmark/benchmark.h>

#include "origami/alhazen.hpp"
#include "origami/classifier.hpp"
#include "origami/constructions.hpp"
#include "origami/cubic.hpp"
#include "origami/serialize.hpp"

using namespace origami;
using AN = AlgebraicNumber;

static void BM_NestedSqrt(benchmark::State& state) {
  for (auto _ : state) {
    AN x(2);
    for (int i = 0; i < state.range(0); ++i) x = sqrt(AN(2) + x);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_NestedSqrt)->Arg(2)->Arg(4)->Arg(6);

static void BM_TrisectCos(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trisect_cos(AN(Rational(1, 3))));
}
BENCHMARK(BM_TrisectCos);

static void BM_HeptagonCubic(benchmark::State& state) {
  RatPolynomial f = RatPolynomial::from_descending({8, 4, -4, -1});
  for (auto _ : state) benchmark::DoNotOptimize(solve_totally_real_cubic(reduce_cubic(f)));
}
BENCHMARK(BM_HeptagonCubic);

static void BM_Recipe(benchmark::State& state, const char* name) {
  for (auto _ : state) benchmark::DoNotOptimize(run_recipe(name));
}
BENCHMARK_CAPTURE(BM_Recipe, pentagon, "pentagon")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Recipe, heptagon, "heptagon")->Unit(benchmark::kMillisecond);

static void BM_ClassifyHeptagonPolynomial(benchmark::State& state) {
  RatPolynomial f = RatPolynomial::from_descending({8, 4, -4, -1});
  for (auto _ : state) benchmark::DoNotOptimize(classify_polynomial(f));
}
BENCHMARK(BM_ClassifyHeptagonPolynomial)->Unit(benchmark::kMillisecond);

static void BM_Alhazen(benchmark::State& state, long ax, long ay, long bx, long by) {
  AlhazenInstance inst{Point(AN(ax), AN(ay)), Point(AN(bx), AN(by))};
  for (auto _ : state) benchmark::DoNotOptimize(solve_alhazen(inst));
}
BENCHMARK_CAPTURE(BM_Alhazen, two_three, 2, 0, 3, 0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Alhazen, generic, 2, 1, -1, 2)->Unit(benchmark::kMillisecond);

static void BM_TraceRoundTrip(benchmark::State& state) {
  ConstructionTrace t = run_recipe("heptagon").trace;
  for (auto _ : state) benchmark::DoNotOptimize(trace_from_json(parse_json(dump(trace_to_json(t)))));
}
BENCHMARK(BM_TraceRoundTrip)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "morseaut/complex.hpp"
#include "morseaut/hasse.hpp"
#include "morseaut/morse.hpp"
#include "morseaut/search.hpp"
#include "morseaut/verify.hpp"

using namespace morseaut;

static void BM_GradientFieldsOfBoundary(benchmark::State& state) {
  const auto k = generate_boundary_simplex(static_cast<int>(state.range(0)));
  const HasseDiagram h(k);
  const auto prims = primitives(h);
  std::size_t count = 0;
  for (auto _ : state) {
    count = 0;
    for_each_gradient_field(h, prims, kDefaultGvfBudget,
                            [&](std::span<const PrimitiveId>) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.counters["fields"] = static_cast<double>(count);
}
BENCHMARK(BM_GradientFieldsOfBoundary)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_GradientFieldsOfCycle(benchmark::State& state) {
  const auto k = generate_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_gvfs(k).size());
}
BENCHMARK(BM_GradientFieldsOfCycle)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_AutMorseOfBoundary3(benchmark::State& state) {
  const auto m = build_morse_complex(generate_boundary_simplex(3));
  for (auto _ : state) benchmark::DoNotOptimize(complex_automorphisms(m).order());
}
BENCHMARK(BM_AutMorseOfBoundary3)->Unit(benchmark::kMillisecond);

static void BM_AutHasseOfBoundary(benchmark::State& state) {
  const Graph g = as_graph(build_hasse(generate_boundary_simplex(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(graph_automorphisms(g).order());
}
BENCHMARK(BM_AutHasseOfBoundary)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_VerifyBoundary4ViaHasse(benchmark::State& state) {
  const auto k = generate_boundary_simplex(4);
  VerifyOptions options;
  options.force_via_hasse = true;
  for (auto _ : state) benchmark::DoNotOptimize(verify_main_theorem(k, options).overall());
}
BENCHMARK(BM_VerifyBoundary4ViaHasse)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

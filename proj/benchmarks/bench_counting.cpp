#include <benchmark/benchmark.h>

#include "c4lab/geometry.hpp"
#include "c4lab/graph.hpp"
#include "c4lab/polarity.hpp"
#include "c4lab/supersat.hpp"

namespace {

using namespace c4lab;

void BM_BuildPlane(benchmark::State& state) {
  const auto spec = field::FieldSpec::of_order(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(geometry::build_pg2(spec));
}
BENCHMARK(BM_BuildPlane)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_CountC4_ER(benchmark::State& state) {
  const auto er = polarity::er_graph(static_cast<std::uint32_t>(state.range(0)), false);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(graph::count_c4(er.graph, threads));
  state.counters["vertices"] = er.graph.n();
}
BENCHMARK(BM_CountC4_ER)->Args({64, 1})->Args({128, 1})->Args({128, 4})->Args({256, 4})->Unit(benchmark::kMillisecond);

void BM_CountC4_Random(benchmark::State& state) {
  CounterRng rng(7, 0);
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const graph::Graph g = supersat::random_graph(n, static_cast<std::uint64_t>(n) * 16, rng);
  for (auto _ : state) benchmark::DoNotOptimize(graph::count_c4(g, 1));
}
BENCHMARK(BM_CountC4_Random)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_VerifyPlane(benchmark::State& state) {
  const auto p = geometry::build_pg2(field::FieldSpec::of_order(static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(geometry::verify_projective_plane(p.structure));
}
BENCHMARK(BM_VerifyPlane)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

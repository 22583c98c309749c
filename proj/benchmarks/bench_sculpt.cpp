#include <benchmark/benchmark.h>

#include "sculpt/central_path.hpp"
#include "sculpt/compiler.hpp"
#include "sculpt/oracle.hpp"
#include "sculpt/verifier.hpp"

namespace {

void BM_PermanentRyser(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  sculpt::ScalarMatrix support = sculpt::support_matrix(sculpt::path_digraph(l)).support();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sculpt::permanent(support));
  }
}
BENCHMARK(BM_PermanentRyser)->DenseRange(2, 12, 2);

void BM_EnumerateDirectedPMs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sculpt::SculptingDigraph g = sculpt::linear_graph_digraph(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sculpt::enumerate_directed_pms(g));
  }
}
BENCHMARK(BM_EnumerateDirectedPMs)->DenseRange(2, 8, 2);

void BM_CompileAndSculpt(benchmark::State& state) {
  const int leaves = static_cast<int>(state.range(0));
  sculpt::CaterpillarSpec spec{{leaves, 0, leaves}};
  for (auto _ : state) {
    sculpt::CompiledScheme scheme = sculpt::compile(spec);
    sculpt::FockState final_state = sculpt::apply_sculpting(
        sculpt::operator_of(scheme), sculpt::initial_state(scheme.all_modes()));
    benchmark::DoNotOptimize(final_state);
  }
}
BENCHMARK(BM_CompileAndSculpt)->DenseRange(0, 3);

void BM_FullPipeline(benchmark::State& state) {
  const int leaves = static_cast<int>(state.range(0));
  sculpt::CaterpillarSpec spec{{leaves, leaves}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sculpt::run_pipeline(spec));
  }
}
BENCHMARK(BM_FullPipeline)->DenseRange(0, 3);

void BM_CaterpillarOracle(benchmark::State& state) {
  const int leaves = static_cast<int>(state.range(0));
  sculpt::CaterpillarSpec spec{{leaves, leaves, leaves}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sculpt::caterpillar_target(spec, sculpt::LeafBasis::Hadamard));
  }
}
BENCHMARK(BM_CaterpillarOracle)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();

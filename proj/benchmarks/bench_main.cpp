#include <benchmark/benchmark.h>

#include "deltasurf/delta_core.hpp"
#include "deltasurf/geometry.hpp"
#include "deltasurf/gluing.hpp"
#include "deltasurf/semigroup.hpp"
#include "deltasurf/transform.hpp"

using namespace deltasurf;

namespace {

IntSequence seq(std::initializer_list<long long> values) {
  IntSequence out;
  for (long long v : values) out.push_back(Int(v));
  return out;
}

void BM_Validate(benchmark::State& state) {
  const IntSequence fixture = seq({13860, 12474, 2926, 4389, 1134, 8779});
  for (auto _ : state) {
    auto outcome = DeltaSequence::validate(fixture);
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(BM_Validate);

void BM_Apery(benchmark::State& state) {
  const IntSequence gens = seq({1134, 2926, 4389, 8779, 12474, 13860});
  for (auto _ : state) {
    auto s = NumericalSemigroup::from_generators(gens);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Apery);

void BM_Enumerate(benchmark::State& state) {
  const Int delta0 = state.range(0);
  for (auto _ : state) {
    auto all = enumerate_delta0(delta0);
    benchmark::DoNotOptimize(all);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Enumerate)->Arg(12)->Arg(24)->Arg(30);

void BM_DualGraph(benchmark::State& state) {
  const DeltaSequence d = DeltaSequence::require(seq({12, 8, 9}));
  for (auto _ : state) {
    auto data = dual_graph(make_type_a(d, 0));
    benchmark::DoNotOptimize(data);
  }
}
BENCHMARK(BM_DualGraph);

void BM_RefineOrderOne(benchmark::State& state) {
  const DeltaSequence d = DeltaSequence::require(seq({1944, 162, 81, 24, 64}));
  for (auto _ : state) {
    auto set = refine_order_one(d);
    benchmark::DoNotOptimize(set);
  }
}
BENCHMARK(BM_RefineOrderOne);

}  // namespace

BENCHMARK_MAIN();

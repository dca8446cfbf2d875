#include <benchmark/benchmark.h>

#include <random>

#include "saxl/fixtures.hpp"

using namespace saxl;

namespace {

ModuleAction fixture(const char* name, unsigned extend = 1, std::uint64_t z = 1) {
  ModuleAction m = scalar_extend(load_module(std::string(SAXL_BENCH_FIXTURES) + "/" + name), extend);
  return natural_module(adjoin_scalars(m.as_group(), z));
}

void BM_FieldMul(benchmark::State& state) {
  Field f = Field::make(static_cast<std::uint32_t>(state.range(0)), static_cast<unsigned>(state.range(1)));
  std::mt19937_64 rng(1);
  std::vector<Elem> xs(4096);
  for (auto& x : xs) x = static_cast<Elem>(rng() % f.order());
  Elem acc = 1;
  for (auto _ : state) {
    for (auto x : xs) acc = f.mul(acc, x) ^ 1;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Args({3, 1})->Args({3, 2})->Args({2, 8})->Args({2, 16})->Args({2, 20});

void BM_ActionApply(benchmark::State& state) {
  ModuleAction m = state.range(0) == 0 ? fixture("m11_f2_10.json", 2) : fixture("m11_f3_5a.json", 2);
  LinearAction act(m);
  std::uint64_t v = 1;
  for (auto _ : state) {
    v = act.apply(v, 0);
    v = act.apply(v ^ 1, 1);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * 2);
}
BENCHMARK(BM_ActionApply)->Arg(0)->Arg(1);

void BM_EnumerateM11(benchmark::State& state) {
  GroupSpec g = fixture("m11_f3_5a.json").as_group();
  g.known_order.reset();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(g).order());
}
BENCHMARK(BM_EnumerateM11)->Unit(benchmark::kMillisecond);

void BM_AllOrbits(benchmark::State& state) {
  ModuleAction m = state.range(0) == 0 ? fixture("m11_f3_5a.json", 2, 2) : fixture("m11_f2_10.json", 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(all_orbits(m).regular_count);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(LinearAction(m).size()));
}
BENCHMARK(BM_AllOrbits)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EigenPartition(benchmark::State& state) {
  ModuleAction m = fixture("m12_f3_10.json");
  Mat g = random_element(m.group, 3);
  for (auto _ : state) benchmark::DoNotOptimize(eigen_partition(g).parts.size());
}
BENCHMARK(BM_EigenPartition)->Unit(benchmark::kMicrosecond);

void BM_MaxR(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(max_R(3629, 165, 2, 3, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_MaxR)->Arg(5)->Arg(24)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "borderidx/decomposition.hpp"
#include "borderidx/index_engine.hpp"
#include "borderidx/random_gen.hpp"

namespace {

using namespace borderidx;

OrderIdeal staircase_311() {
  return OrderIdeal::from_generators(2, {ExponentVector{2, 0},
                                         ExponentVector{0, 2}});
}

void BM_IndexTableSmall(benchmark::State& state) {
  const auto ideal = staircase_311();
  for (auto _ : state) {
    benchmark::DoNotOptimize(index_table(ideal, ExponentVector{7, 7}));
  }
}
BENCHMARK(BM_IndexTableSmall);

void BM_IndexTableWide(benchmark::State& state) {
  const auto ideal = staircase_311();
  const auto side = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(index_table(ideal, ExponentVector{side, side}));
  }
}
BENCHMARK(BM_IndexTableWide)->Arg(32)->Arg(128);

void BM_IndGf(benchmark::State& state) {
  RandomGen gen(1);
  const auto ideal =
      gen.order_ideal(static_cast<std::size_t>(state.range(0)), 60);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ind_gf(ideal));
  }
}
BENCHMARK(BM_IndGf)->Arg(2)->Arg(3)->Arg(4);

void BM_ExpandIndGf(benchmark::State& state) {
  RandomGen gen(2);
  const auto ideal = gen.order_ideal(3, 60);
  const auto gf = ind_gf(ideal).gf;
  auto bounds = bounding_box(ideal).corner.coords();
  for (auto& c : bounds) c += 6;
  const ExponentVector box(bounds);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand(gf, box));
  }
}
BENCHMARK(BM_ExpandIndGf);

void BM_ValidatePartition(benchmark::State& state) {
  RandomGen gen(3);
  const auto ideal = gen.order_ideal(3, 60);
  const auto d = enlarged_box_decomposition(ideal);
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_partition(d, ideal));
  }
}
BENCHMARK(BM_ValidatePartition);

}  // namespace

BENCHMARK_MAIN();

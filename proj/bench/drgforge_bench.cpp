#include <random>

#include <benchmark/benchmark.h>

#include "drgforge/acceptance.hpp"
#include "drgforge/classify.hpp"
#include "drgforge/design.hpp"
#include "drgforge/drg.hpp"

using namespace drgforge;

namespace {

FamilyKind family_arg(const benchmark::State& state) {
  return state.range(0) == 0 ? FamilyKind::SemiDihedral : FamilyKind::PseudoSemiDihedral;
}

void BM_HadamardHashJoin(benchmark::State& state) {
  const auto family = family_arg(state);
  const int n = static_cast<int>(state.range(1));
  const int threads = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(search_hadamard_pairs(family, n, threads));
}
BENCHMARK(BM_HadamardHashJoin)
    ->Args({0, 16, 1})
    ->Args({1, 32, 1})
    ->Args({0, 32, 1})
    ->Args({0, 32, 0})
    ->Args({1, 64, 1})
    ->Args({1, 64, 0})
    ->Unit(benchmark::kMillisecond);

void BM_HadamardReference(benchmark::State& state) {
  const auto family = family_arg(state);
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search_hadamard_pairs_reference(family, n));
}
BENCHMARK(BM_HadamardReference)->Args({0, 16})->Args({1, 32})->Unit(benchmark::kMillisecond);

const CayleyGraph& sd32_graph() {
  static const CayleyGraph graph = build_from_spec(known_hadamard_pairs()[2].spec());
  return graph;
}

void BM_DrgAllBases(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_distance_regular(sd32_graph().graph(), BaseMode::All, threads));
  }
}
BENCHMARK(BM_DrgAllBases)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_DrgSingleBase(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_distance_regular(sd32_graph(), BaseMode::Single));
}
BENCHMARK(BM_DrgSingleBase)->Unit(benchmark::kMicrosecond);

std::vector<ConnectionSpec> sweep_specs() {
  std::mt19937_64 rng(7);
  std::vector<ConnectionSpec> specs;
  for (int i = 0; i < 256; ++i) {
    specs.push_back(random_connection_spec(i % 2 ? FamilyKind::PseudoSemiDihedral : FamilyKind::SemiDihedral, 8,
                                           rng, 0.3));
  }
  return specs;
}

void BM_SweepParallel(benchmark::State& state) {
  const auto specs = sweep_specs();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classification_sweep(specs, threads));
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_SweepReference(benchmark::State& state) {
  const auto specs = sweep_specs();
  for (auto _ : state) benchmark::DoNotOptimize(classification_sweep_reference(specs));
}
BENCHMARK(BM_SweepReference)->Unit(benchmark::kMillisecond);

void BM_DifferenceSetSearch(benchmark::State& state) {
  const Group z(GroupFamily{FamilyKind::Cyclic, static_cast<int>(state.range(0))});
  const auto h = whole_group(z);
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search_difference_sets(h, k, static_cast<int>(state.range(2))));
}
BENCHMARK(BM_DifferenceSetSearch)->Args({16, 6, 1})->Args({16, 6, 0})->Args({31, 6, 0})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "binact/action.hpp"
#include "binact/continuum.hpp"
#include "binact/enumerate.hpp"
#include "binact/gallery.hpp"
#include "binact/morphisms.hpp"

using namespace binact;

static void BM_OrbitDihedral(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto space = dihedral_conjugation_space(m);
  const Index x = dihedral_base_point(m);
  for (auto _ : state) benchmark::DoNotOptimize(orbit(space, x));
}
BENCHMARK(BM_OrbitDihedral)->Arg(8)->Arg(16)->Arg(32);

static void BM_OrbitEta(benchmark::State& state) {
  const auto space = standard_distributive_action(symmetric_group(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(orbit(space, 0));
}
BENCHMARK(BM_OrbitEta)->Arg(3)->Arg(4);

static void BM_WindowedOrbit(benchmark::State& state) {
  const WindowedIntSpace w(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(w.orbit(2));
}
BENCHMARK(BM_WindowedOrbit)->Arg(20)->Arg(50);

static void BM_Census(benchmark::State& state) {
  const auto group = cyclic_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(census(group, 3));
}
BENCHMARK(BM_Census)->Arg(2)->Arg(4);

static void BM_MapSearch(benchmark::State& state) {
  const auto group = symmetric_group(static_cast<std::size_t>(state.range(0)));
  const auto eta = standard_distributive_action(group);
  for (auto _ : state) benchmark::DoNotOptimize(find_biequivariant_maps(eta, eta));
}
BENCHMARK(BM_MapSearch)->Arg(3)->Arg(4);

static void BM_Reach(benchmark::State& state) {
  const EuclideanAction a(static_cast<std::size_t>(state.range(0)));
  const Vector z(a.dim(), 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(reach(a, z));
}
BENCHMARK(BM_Reach)->Arg(2)->Arg(8);

BENCHMARK_MAIN();

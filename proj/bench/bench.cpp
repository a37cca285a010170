// Serial reference vs OpenMP kernel for each parallel code path.
// Run with --benchmark_filter=<name> to narrow down.

#include <benchmark/benchmark.h>

#include "thetakit/nodal.hpp"
#include "thetakit/spin.hpp"
#include "thetakit/theta_f2.hpp"

using namespace thetakit;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_enumerate_blowdowns(benchmark::State& state) {
  const PicardLattice lat(2);
  for (auto _ : state) benchmark::DoNotOptimize(lat.enumerate(ClassKind::blow_down, mode(state)));
}

void BM_weyl_orbit(benchmark::State& state) {
  const PicardLattice lat(2);
  for (auto _ : state) benchmark::DoNotOptimize(lat.weyl_orbit(lat.line_class(), mode(state)));
}

void BM_congruence_classes(benchmark::State& state) {
  const NodalConfig cfg(PicardLattice(2), {DivisorClass{1, -1, -1, -1, 0, 0, 0, 0}});
  const auto bd = cfg.lattice().enumerate(ClassKind::blow_down);
  for (auto _ : state) benchmark::DoNotOptimize(congruence_classes(cfg, bd, mode(state)));
}

void BM_count_zeros(benchmark::State& state) {
  const auto q = QuadraticSpace::standard(10, 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_zeros(q, mode(state)));
}

void BM_enumerate_aronhold(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_aronhold(mode(state)));
}

void BM_even_subsets_scan(benchmark::State& state) {
  // 20 loops on a genus-22 vertex: 2^20 subsets to scan.
  const auto g = DualGraph::irreducible(2, 20);
  for (auto _ : state) benchmark::DoNotOptimize(even_subsets_scan(g, mode(state)));
}

}  // namespace

#define SERIAL_AND_PARALLEL(fn) BENCHMARK(fn)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)

SERIAL_AND_PARALLEL(BM_enumerate_blowdowns);
SERIAL_AND_PARALLEL(BM_weyl_orbit);
SERIAL_AND_PARALLEL(BM_congruence_classes);
SERIAL_AND_PARALLEL(BM_count_zeros);
SERIAL_AND_PARALLEL(BM_enumerate_aronhold);
SERIAL_AND_PARALLEL(BM_even_subsets_scan);

BENCHMARK_MAIN();

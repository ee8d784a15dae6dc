// Serial reference vs OpenMP kernel for the main sweeps.
// Arg 0 is q, arg 1 selects the path (0 serial, 1 parallel).

#include <benchmark/benchmark.h>

#include "laguerre/autgroup.hpp"
#include "laguerre/plane.hpp"
#include "laguerre/skewaffine.hpp"
#include "laguerre/verify.hpp"

using namespace laguerre;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void BM_LaguerreAxioms(benchmark::State& state) {
  Plane pl(FieldSpec::make(static_cast<int>(state.range(0))));
  Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify_laguerre_axioms(pl, exec).cases_checked);
}

void BM_LaguerreAxiomsReference(benchmark::State& state) {
  Plane pl(FieldSpec::make(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_laguerre_axioms_reference(pl).cases_checked);
}

void BM_GroupSpaceBuild(benchmark::State& state) {
  Plane pl(FieldSpec::make(static_cast<int>(state.range(0))));
  auto G = DeltaGroup::build(pl, canonical_pencil());
  Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(GroupSpace::build(G, exec).num_lines());
}

void BM_AxiomSweep(benchmark::State& state, Axiom axiom, Budget budget) {
  Plane pl(FieldSpec::make(static_cast<int>(state.range(0))));
  auto G = DeltaGroup::build(pl, canonical_pencil());
  auto gs = GroupSpace::build(G);
  Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(check_axiom(gs, axiom, budget, exec).cases_checked);
}

void BM_EquivRelation(benchmark::State& state) {
  Plane pl(FieldSpec::make(static_cast<int>(state.range(0))));
  Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(equiv_relation(pl, Circle{0, 0, 0}, exec).blocks.size());
}

}  // namespace

BENCHMARK(BM_LaguerreAxioms)->ArgsProduct({{5, 7, 11}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LaguerreAxiomsReference)->Args({5, 0})->Args({7, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GroupSpaceBuild)->ArgsProduct({{5, 7, 11}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AxiomSweep, P1, Axiom::P1, Budget::exhaustive_budget())
    ->ArgsProduct({{5, 7}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AxiomSweep, Pgm, Axiom::Pgm, Budget::exhaustive_budget())
    ->ArgsProduct({{5, 7}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AxiomSweep, T_exhaustive, Axiom::T, Budget::exhaustive_budget())
    ->ArgsProduct({{5}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AxiomSweep, Des_sampled, Axiom::Des, Budget::sampled(200000, 1))
    ->ArgsProduct({{7}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EquivRelation)->ArgsProduct({{7, 11}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

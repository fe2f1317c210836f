// Serial reference vs OpenMP kernel on the same inputs.

#include <benchmark/benchmark.h>

#include "ecdp/color_coding.hpp"
#include "ecdp/flow.hpp"
#include "ecdp/generators.hpp"
#include "ecdp/oracle.hpp"
#include "ecdp/xp_solver.hpp"

using namespace ecdp;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void set_label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_Enumerate(benchmark::State& state) {
  const auto inst = gen_random_instance(13, 8, 0.35, 3, 42);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_unicolor_paths(inst, kDefaultPathCap, exec_of(state)));
  set_label(state);
}

void BM_PerColorFlow(benchmark::State& state) {
  const auto inst = gen_random_instance(200, 16, 0.08, 3, 42);
  for (auto _ : state) benchmark::DoNotOptimize(per_color_flow_values(inst, exec_of(state)));
  set_label(state);
}

void BM_ColorCodingTables(benchmark::State& state) {
  auto inst = gen_random_instance(14, 5, 0.35, 2, 42);
  inst.mode = Mode::Cddp;
  const auto lab = injective_labeling(inst);
  for (auto _ : state) {
    ColorCodingTables t(inst, lab, 4, 3, Mode::Cddp, exec_of(state));
    benchmark::DoNotOptimize(t.best());
  }
  set_label(state);
}

void BM_ColorCodingTrials(benchmark::State& state) {
  auto inst = gen_random_instance(16, 4, 0.3, 2, 7);
  inst.mode = Mode::Cdp;
  LabelingStrategy s;
  s.trials = 64;
  for (auto _ : state) benchmark::DoNotOptimize(maximize_color_coding(inst, 3, 3, s, exec_of(state)));
  set_label(state);
}

void BM_Xp(benchmark::State& state) {
  const auto inst = gen_disjoint_paths_instance(16, 3, 11, 2);
  const auto x = find_deletion_set(inst, 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_xp_cdp(inst, *x, exec_of(state)));
  set_label(state);
}

}  // namespace

BENCHMARK(BM_Enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PerColorFlow)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColorCodingTables)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColorCodingTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Xp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

// Serial reference vs OpenMP kernels, plus the closure solve, on the
// synthetic deposit.
#include <benchmark/benchmark.h>

#include <map>

#include "pittrans/economics.hpp"
#include "pittrans/precedence.hpp"
#include "pittrans/solver.hpp"
#include "pittrans/synthetic.hpp"

namespace {

using namespace pittrans;

const BlockModel& deposit(int n) {
  static std::map<int, BlockModel> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    SyntheticDepositSpec spec;
    spec.grid = {n, n, 40, 30.0, 30.0, 30.0, 0.0};
    spec.center_i = spec.center_j = n / 2.0;
    spec.radius_i = n / 5.0;
    spec.radius_j = n / 6.6;
    it = cache.emplace(n, generate_synthetic_deposit(spec)).first;
  }
  return it->second;
}

void BM_BArcsSerial(benchmark::State& state) {
  const auto& g = deposit(static_cast<int>(state.range(0))).grid();
  const auto tpl = build_slope_template({45.0, 5}, g);
  for (auto _ : state) benchmark::DoNotOptimize(build_b_arcs_serial(g, tpl));
}

void BM_BArcsParallel(benchmark::State& state) {
  const auto& g = deposit(static_cast<int>(state.range(0))).grid();
  const auto tpl = build_slope_template({45.0, 5}, g);
  for (auto _ : state) benchmark::DoNotOptimize(build_b_arcs(g, tpl));
}

void BM_WeightsSerial(benchmark::State& state) {
  const auto& m = deposit(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_vertex_weights_serial(m, {}, WeightMode::dual));
}

void BM_WeightsParallel(benchmark::State& state) {
  const auto& m = deposit(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_vertex_weights(m, {}, WeightMode::dual));
}

void BM_SolveDual(benchmark::State& state) {
  const auto& m = deposit(static_cast<int>(state.range(0)));
  ArcSet arcs;
  arcs.b = build_b_arcs(m.grid(), build_slope_template({45.0, 5}, m.grid()));
  arcs.c = build_c_arcs(m, 0);
  const auto assembled = assemble_problem(build_vertex_weights(m, {}, WeightMode::dual), arcs, m);
  for (auto _ : state) benchmark::DoNotOptimize(solve_max_closure(assembled.problem));
  state.counters["vertices"] = static_cast<double>(assembled.problem.vertex_count);
  state.counters["arcs"] = static_cast<double>(assembled.problem.arcs.size());
}

BENCHMARK(BM_BArcsSerial)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BArcsParallel)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightsSerial)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightsParallel)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveDual)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

// Serial reference loops against the OpenMP kernels.
//   bench_kernels --benchmark_filter=grading

#include <benchmark/benchmark.h>

#include "wqo/physics.hpp"
#include "wqo/report.hpp"
#include "wqo/verifier.hpp"

using namespace wqo;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) == 0 ? "serial" : "parallel"); }

void BM_sl_triple(benchmark::State& st) {
  const auto caos = build_sl3(6, 5);
  for (auto _ : st) benchmark::DoNotOptimize(check_sl_triple(caos, exec_of(st)));
  label(st);
}

void BM_osp_triple(benchmark::State& st) {
  const auto caos = build_ospB(3, 3);
  for (auto _ : st) benchmark::DoNotOptimize(check_osp_triple(caos, exec_of(st)));
  label(st);
}

void BM_parabose(benchmark::State& st) {
  const auto bops = parabose_ops(build_ospB(0, 6));
  for (auto _ : st) benchmark::DoNotOptimize(check_parabose(bops, exec_of(st)));
  label(st);
}

void BM_cc_scalar(benchmark::State& st) {
  const auto caos = build_sl5a(6, 5, 2);
  for (auto _ : st) benchmark::DoNotOptimize(cc_scalar(caos, exec_of(st)));
  label(st);
}

void BM_grading(benchmark::State& st) {
  const auto caos = build_ospD2(3, 3);
  for (auto _ : st) benchmark::DoNotOptimize(grading_analysis(caos, exec_of(st)));
  label(st);
}

void BM_cc_residual(benchmark::State& st) {
  const auto caos = build_ospB(3, 4);
  const auto p = PhysParams::from_cc(cc_scalar(caos));
  const auto ops = build_h(build_rp(assign_nd(caos, 4, 7), p), p);
  for (auto _ : st) benchmark::DoNotOptimize(cc_residual(ops, p, exec_of(st)));
  label(st);
}

void BM_enumerate(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_solutions(2, 6, 6, exec_of(st)));
  label(st);
}

}  // namespace

BENCHMARK(BM_sl_triple)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_osp_triple)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parabose)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cc_scalar)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_grading)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cc_residual)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "grayform/torus.hpp"

using namespace grayform;

namespace {

void BM_ClosedForm(benchmark::State& state) {
  FSpec s = sphere_fspec();
  HKFrame hk = HKFrame::standard();
  Vec4<double> x{0.3, 1.2, -0.7, 2.2};
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_invariants(evaluate(s, x), hk));
}
BENCHMARK(BM_ClosedForm);

void BM_Report(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(TorusSolver(sphere_fspec(), HKFrame::standard(), n).report());
  state.SetItemsProcessed(state.iterations() * std::int64_t(n) * n * n * n);
}
BENCHMARK(BM_Report)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

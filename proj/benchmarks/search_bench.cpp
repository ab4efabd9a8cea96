#include <benchmark/benchmark.h>

#include "grayform/search.hpp"

using namespace grayform;

namespace {

LieAlgebra4<double> named(const char* n) {
  LieAlgebra4<double> a = catalog::by_name(n).convert<double>();
  a.name = n;
  return a;
}

void BM_Defect(benchmark::State& state) {
  LieAlgebra4<double> a = named("affc");
  StructureParams p;
  p.jsphere = {0.6, 0.0, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(defect(a, p));
}
BENCHMARK(BM_Defect);

void BM_Search(benchmark::State& state) {
  LieAlgebra4<double> a = named("heis3r");
  SearchConfig cfg;
  cfg.starts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search(a, cfg));
}
BENCHMARK(BM_Search)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

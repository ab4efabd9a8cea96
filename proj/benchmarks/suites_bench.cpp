#include <benchmark/benchmark.h>

#include "grayform/suites.hpp"

using namespace grayform;

namespace {

void BM_StructureRational(benchmark::State& state) {
  std::mt19937_64 rng(1);
  RandomStructureSample s = random_structure(rng, false);
  for (auto _ : state) benchmark::DoNotOptimize(Structure<Rational>(s.alg, s.J, s.gauge));
}
BENCHMARK(BM_StructureRational);

void BM_StructureDouble(benchmark::State& state) {
  std::mt19937_64 rng(1);
  RandomStructureSample s = random_structure(rng, false);
  Structure<double> st = Structure<Rational>(s.alg, s.J, s.gauge).convert<double>(Tol{1e-9});
  for (auto _ : state) benchmark::DoNotOptimize(Structure<double>(st.alg(), st.J(), st.gauge(), Tol{1e-9}));
}
BENCHMARK(BM_StructureDouble);

void BM_Suite(benchmark::State& state) {
  std::mt19937_64 rng(2);
  RandomStructureSample s = random_structure(rng, false);
  Structure<Rational> st(s.alg, s.J, s.gauge);
  SuiteKind k = all_suites()[state.range(0)];
  state.SetLabel(std::string(suite_name(k)));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(st, k));
}
BENCHMARK(BM_Suite)->DenseRange(0, 5);

void BM_G1Defects(benchmark::State& state) {
  Structure<Rational> st(catalog::a36_a1(), catalog::j_alt());
  for (auto _ : state) benchmark::DoNotOptimize(g1_defects(st, st.gauge()));
}
BENCHMARK(BM_G1Defects);

}  // namespace

BENCHMARK_MAIN();

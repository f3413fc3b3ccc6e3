#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "relpca/ybe.hpp"

using namespace relpca;

static void BM_RelPCACheck6(benchmark::State& state) {
  RelPCA s = fx::d6pre();
  for (auto _ : state) benchmark::DoNotOptimize(check_rel_pca(s).all());
}
BENCHMARK(BM_RelPCACheck6);

static void BM_RpcaYbe6(benchmark::State& state) {
  RelPCA s = fx::d6pre();
  Tensor2 r = fx::r6();
  for (auto _ : state) benchmark::DoNotOptimize(check_rpca_ybe(s, r).all());
}
BENCHMARK(BM_RpcaYbe6);

static void BM_CobSuite3(benchmark::State& state) {
  RelPCA s = fx::a3_rel_pca();
  Tensor2 r(3, 3);
  r(0, 1) = 1;
  r(1, 0) = -1;
  for (auto _ : state) benchmark::DoNotOptimize(cob_condition_suite(s, r).all());
}
BENCHMARK(BM_CobSuite3);

static void BM_Bialgebra6(benchmark::State& state) {
  RelPCABialgebra b{fx::d6pre(), fx::b6_delta(), fx::b6_theta()};
  for (auto _ : state) benchmark::DoNotOptimize(check_rel_pca_bialgebra(b).all());
}
BENCHMARK(BM_Bialgebra6);

static void BM_EnumerateYbe3(benchmark::State& state) {
  RelPCA s = fx::a3_rel_pca();
  std::vector<Rat> coeffs{Rat(-1), Rat(0), Rat(1)};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ybe_solutions(s, coeffs).size());
}
BENCHMARK(BM_EnumerateYbe3);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "mzv/composition.hpp"
#include "mzv/finite_zeta.hpp"
#include "mzv/numeric.hpp"
#include "mzv/stuffle.hpp"
#include "mzv/xi.hpp"

namespace {

void BM_FiniteZetaProfile(benchmark::State& state) {
  const mzv::Composition c{2, 1};
  const std::int64_t upper = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzv::zeta_finite_profile(upper, c));
  }
}
BENCHMARK(BM_FiniteZetaProfile)->Arg(50)->Arg(200);

void BM_StuffleProduct(benchmark::State& state) {
  const mzv::Composition k{2, 1, 1};
  const mzv::Composition h{3, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzv::stuffle_product(k, h));
  }
}
BENCHMARK(BM_StuffleProduct);

// Summation kernel throughput: capped run over a fixed term count.
void BM_SeriesKernel(benchmark::State& state) {
  mzv::NumericConfig cfg;
  cfg.tol = 1e-12;
  cfg.max_terms = state.range(0);
  const mzv::Composition c{2, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzv::zeta_infinite(c, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SeriesKernel)->Arg(100000)->Arg(1000000);

void BM_Polylog(benchmark::State& state) {
  mzv::NumericConfig cfg;
  cfg.tol = 1e-10;
  const mzv::Composition c{2, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzv::polylog(c, 0.5, cfg));
  }
}
BENCHMARK(BM_Polylog);

void BM_XiExpansionTerms(benchmark::State& state) {
  const mzv::Composition c{2, 1};
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzv::xi_expansion_terms(c, n));
  }
}
BENCHMARK(BM_XiExpansionTerms)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();

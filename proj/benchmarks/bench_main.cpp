#include <benchmark/benchmark.h>

#include "gcdens/arith.hpp"
#include "gcdens/conjecture.hpp"
#include "gcdens/count.hpp"
#include "gcdens/entangle.hpp"
#include "gcdens/gl2.hpp"

using namespace gcdens;

static void BM_SievePrimes(benchmark::State& state) {
  const auto limit = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve_primes(limit));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(limit));
}
BENCHMARK(BM_SievePrimes)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_CardinalityBsgs(benchmark::State& state) {
  const auto curve = new_curve(0, 0, 1, -1, 0);
  auto primes = sieve_primes(static_cast<u64>(state.range(0)) + 1000);
  const auto e = reduce_mod_p(curve, primes.back());
  u64 seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(cardinality_bsgs(e, seed++));
}
BENCHMARK(BM_CardinalityBsgs)->Arg(10'000)->Arg(1'000'000)->Arg(100'000'000);

static void BM_CharSum(benchmark::State& state) {
  const auto curve = new_curve(0, 0, 1, -1, 0);
  auto primes = sieve_primes(static_cast<u64>(state.range(0)) + 1000);
  const auto e = reduce_mod_p(curve, primes.back());
  for (auto _ : state) benchmark::DoNotOptimize(ap_naive(e));
}
BENCHMARK(BM_CharSum)->Arg(10'000)->Arg(100'000);

static void BM_EnumerateGl2(benchmark::State& state) {
  const auto ell = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_gl2(ell));
}
BENCHMARK(BM_EnumerateGl2)->Arg(5)->Arg(13);

static void BM_EnumerateDensity(benchmark::State& state) {
  const auto spec = EntangleSpec::make({2, 3, 5}, -15);
  const auto strategy = state.range(0) ? EnumerationStrategy::Aggregate : EnumerationStrategy::Cartesian;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_density(spec, strategy));
}
BENCHMARK(BM_EnumerateDensity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_UniversalConstant(benchmark::State& state) {
  const auto limit = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(universal_constant(limit));
}
BENCHMARK(BM_UniversalConstant)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

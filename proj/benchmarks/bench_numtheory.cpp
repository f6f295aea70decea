#include "ospec/numtheory.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace nt = ospec::numtheory;

namespace {

void BM_FactorizeSmooth(benchmark::State& state) {
  // 3^15 + 1 and friends: the shapes the toolkit factors constantly
  nt::Int n = 1;
  mpz_ui_pow_ui(n.get_mpz_t(), 3, 15);
  n += 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nt::factorize(n + state.iterations() % 2));
  }
}
BENCHMARK(BM_FactorizeSmooth);

void BM_FactorizeRandom64(benchmark::State& state) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint64_t> dist(2, ~std::uint64_t(0));
  for (auto _ : state) {
    // fresh values defeat the cache
    nt::Int n(static_cast<unsigned long>(dist(rng)));
    benchmark::DoNotOptimize(nt::factorize(n));
  }
}
BENCHMARK(BM_FactorizeRandom64);

void BM_PrimitivePrimeDivisors(benchmark::State& state) {
  const unsigned long i = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nt::primitive_prime_divisors(3, i));
  }
}
BENCHMARK(BM_PrimitivePrimeDivisors)->Arg(20)->Arg(54)->Arg(90);

void BM_IsPrime64(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(2, ~std::uint64_t(0));
  for (auto _ : state) {
    nt::Int n(static_cast<unsigned long>(dist(rng)));
    benchmark::DoNotOptimize(nt::is_prime(n));
  }
}
BENCHMARK(BM_IsPrime64);

}  // namespace

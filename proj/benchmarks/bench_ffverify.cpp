#include "ospec/ffverify.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace ff = ospec::ffverify;

namespace {

void BM_SemidirectMuClassReps(benchmark::State& state) {
  const ff::Gf3Field& field = ff::gf_make(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ff::semidirect_mu(field, ff::EnumMode::ClassReps));
  }
}
BENCHMARK(BM_SemidirectMuClassReps)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SemidirectMuExhaustive27(benchmark::State& state) {
  const ff::Gf3Field& field = ff::gf_make(3);
  ff::SemidirectOptions opt;
  opt.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ff::semidirect_mu(field, ff::EnumMode::Exhaustive, opt));
  }
}
BENCHMARK(BM_SemidirectMuExhaustive27)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ElementOrder(benchmark::State& state) {
  const ff::Gf3Field& field = ff::gf_make(3);
  const ff::ModuleGroup m(field);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> d(0, m.sl2_size() - 1);
  std::vector<ff::FqMatrix> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(ff::phi(m.sl2_element(d(rng))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ff::element_order(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_ElementOrder);

void BM_BruteForceCosetSample(benchmark::State& state) {
  const ff::Gf3Field& field = ff::gf_make(5);
  ff::FqMatrix u(field, 2);
  u.at(0, 0) = u.at(1, 1) = u.at(0, 1) = field.one();
  ff::FqMatrix img = ff::phi(u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ff::brute_force_coset_orders(img, 1000, 11));
  }
}
BENCHMARK(BM_BruteForceCosetSample)->Unit(benchmark::kMillisecond);

}  // namespace

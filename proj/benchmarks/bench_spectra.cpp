#include "ospec/catalog.hpp"
#include "ospec/prime_graph.hpp"
#include "ospec/spectrum.hpp"

#include <benchmark/benchmark.h>

namespace cat = ospec::catalog;
namespace pg = ospec::primegraph;

namespace {

void BM_PowerJ1(benchmark::State& state) {
  auto j1 = cat::mu(cat::GroupSpec::j1());
  for (auto _ : state) {
    benchmark::DoNotOptimize(j1.power(state.range(0)));
  }
}
BENCHMARK(BM_PowerJ1)->Arg(2)->Arg(4)->Arg(6);

void BM_ProductOfThreeReeSpectra(benchmark::State& state) {
  auto r1 = cat::mu(cat::GroupSpec::ree_alpha(5));
  auto r2 = cat::mu(cat::GroupSpec::ree_alpha(13));
  auto r3 = cat::mu(cat::GroupSpec::ree_alpha(17));
  for (auto _ : state) {
    benchmark::DoNotOptimize(product(product(r1, r2), r3));
  }
}
BENCHMARK(BM_ProductOfThreeReeSpectra);

void BM_MaxCocliqueJ1(benchmark::State& state) {
  pg::PrimeGraph g = pg::build(cat::mu(cat::GroupSpec::j1()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pg::max_coclique(g));
  }
}
BENCHMARK(BM_MaxCocliqueJ1);

void BM_BuildGraphRee27(benchmark::State& state) {
  auto s = cat::mu(cat::GroupSpec::ree(27));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pg::build(s));
  }
}
BENCHMARK(BM_BuildGraphRee27);

}  // namespace

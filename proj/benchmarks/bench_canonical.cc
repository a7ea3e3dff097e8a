#include <benchmark/benchmark.h>

#include "cwl/char_algebra.hpp"
#include "cwl/character.hpp"

namespace {

cwl::Character power_of(const cwl::Character& c, int m) {
  cwl::Character acc;
  for (int i = 0; i < m; ++i) acc = cwl::disjoint_union(acc, c);
  return acc;
}

void BM_CanonicalizeTheta(benchmark::State& state) {
  const cwl::Character theta = cwl::theta_graph();
  for (auto _ : state) benchmark::DoNotOptimize(cwl::canonicalize(theta));
}
BENCHMARK(BM_CanonicalizeTheta);

void BM_CanonicalizeHbarPower(benchmark::State& state) {
  const cwl::Character h = power_of(cwl::hbar(1, 2), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cwl::canonicalize(h));
}
BENCHMARK(BM_CanonicalizeHbarPower)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

// worst automorphism pressure in scope: eight interchangeable tripods
void BM_CanonicalizeTripodPower8(benchmark::State& state) {
  const cwl::Character w8 = power_of(cwl::tripod(1, 2, 3), 8);
  for (auto _ : state) benchmark::DoNotOptimize(cwl::canonicalize(w8));
}
BENCHMARK(BM_CanonicalizeTripodPower8);

}  // namespace

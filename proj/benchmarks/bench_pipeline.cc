#include <benchmark/benchmark.h>

#include "cwl/char_algebra.hpp"
#include "cwl/lescop.hpp"
#include "cwl/lmo.hpp"
#include "cwl/pairing.hpp"
#include "cwl/verify.hpp"

namespace {

cwl::Character power_of(const cwl::Character& c, int m) {
  cwl::Character acc;
  for (int i = 0; i < m; ++i) acc = cwl::disjoint_union(acc, c);
  return acc;
}

void BM_JoinExactWorstCase(benchmark::State& state) {
  // n = 4, m = 4: 105 matchings over eight tripod legs
  const cwl::CharCombo x = cwl::CharCombo::single(power_of(cwl::tripod(1, 2, 3), 8));
  const cwl::PairingContext ctx(4);
  for (auto _ : state) benchmark::DoNotOptimize(cwl::join_exact(x, 3, ctx));
}
BENCHMARK(BM_JoinExactWorstCase);

void BM_HnElement(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cwl::h_n(n));
}
BENCHMARK(BM_HnElement)->Arg(1)->Arg(2)->Arg(3);

void BM_LambdaSurgery(benchmark::State& state) {
  cwl::SplitMix64 rng(cwl::kDefaultSeed);
  std::vector<cwl::SurgeryPresentation> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(cwl::random_presentation(rng, 4));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cwl::lambda_surgery(inputs[i]));
    i = (i + 1) % inputs.size();
  }
}
BENCHMARK(BM_LambdaSurgery);

void BM_Z1Pipeline(benchmark::State& state) {
  cwl::SurgeryPresentation trefoil;
  trefoil.components = 1;
  trefoil.framings = {1};
  trefoil.a1 = {cwl::Rational(1)};
  for (auto _ : state) benchmark::DoNotOptimize(cwl::z1(trefoil));
}
BENCHMARK(BM_Z1Pipeline);

void BM_ZnB2Degree2(benchmark::State& state) {
  cwl::SurgeryPresentation s;
  s.components = 3;
  s.framings = {0, 0, 2};
  s.mu22[{1, 2}] = 1;
  s.a1.assign(3, cwl::Rational(0));
  for (auto _ : state) benchmark::DoNotOptimize(cwl::zn_b2(s, 2));
}
BENCHMARK(BM_ZnB2Degree2);

}  // namespace

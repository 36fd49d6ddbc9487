#include <benchmark/benchmark.h>

#include "hauteur/heightoracle.hpp"

namespace {

void BM_LehmerHeight(benchmark::State& state) {
  const auto lehmer =
      hauteur::AlgebraicNumber::parse("x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1");
  const auto bits = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hauteur::weil_height(lehmer, bits));
}
BENCHMARK(BM_LehmerHeight)->Arg(128)->Arg(512);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hauteur::northcott_census(2, 0.5));
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

}  // namespace

#include <benchmark/benchmark.h>

#include "hauteur/krasner.hpp"

namespace {

void BM_CountExtensions(benchmark::State& state) {
  const auto field = hauteur::LocalField::make(2, 1);
  const auto d = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hauteur::count_extensions(field, d));
}
BENCHMARK(BM_CountExtensions)->Arg(8)->Arg(16)->Arg(24);

void BM_EnumerateProfiles(benchmark::State& state) {
  const auto field = hauteur::LocalField::make(5, 1);
  const auto dmax = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hauteur::enumerate_profiles(field, dmax));
}
BENCHMARK(BM_EnumerateProfiles)->Arg(10)->Arg(20);

}  // namespace

#include <benchmark/benchmark.h>

#include "hauteur/compositum.hpp"
#include "hauteur/heightbound.hpp"

namespace {

void BM_AppendixBounds(benchmark::State& state) {
  const auto field = hauteur::LocalField::make(state.range(0));
  for (auto _ : state) {
    const auto family = hauteur::ExtensionMultiset::all_extensions(field, 10);
    benchmark::DoNotOptimize(hauteur::inertia_bound(family, family.inertia_lcm()));
    benchmark::DoNotOptimize(hauteur::crude_bound(family));
  }
}
BENCHMARK(BM_AppendixBounds)->Arg(5)->Arg(11);

void BM_LambdaBeta(benchmark::State& state) {
  const hauteur::Integer e = state.range(0);
  const auto base = hauteur::BaseFieldData::rationals();
  for (auto _ : state) benchmark::DoNotOptimize(hauteur::lambda_beta(e, 3, base));
}
BENCHMARK(BM_LambdaBeta)->Arg(60)->Arg(1'000'000);

}  // namespace

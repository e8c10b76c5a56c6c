#include <benchmark/benchmark.h>

#include "amst/compactness.hpp"
#include "amst/consequence.hpp"
#include "amst/generate.hpp"
#include "amst/topology.hpp"
#include "amst/ultra.hpp"

using namespace amst;

namespace {

FiniteAmst instance(int models, int sentences, std::uint64_t seed = 11) {
  GenParams p;
  p.seed = seed;
  p.max_models = models;
  p.max_sentences = sentences;
  p.density = 0.35;
  FiniteAmst a = random_amst(p);
  // regenerate until the requested shape comes up, for stable benchmarks
  std::uint64_t s = seed;
  while (a.model_count() != models || a.sentence_count() != sentences) {
    p.seed = ++s;
    a = random_amst(p);
  }
  return a;
}

void BM_ModOf(benchmark::State& state) {
  const FiniteAmst a = instance(8, 8);
  Mask g = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.mod_of(g & a.all_sentences()));
    ++g;
  }
}
BENCHMARK(BM_ModOf);

void BM_ThOf(benchmark::State& state) {
  const FiniteAmst a = instance(8, 8);
  Mask x = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.th_of(x & a.all_models()));
    ++x;
  }
}
BENCHMARK(BM_ThOf);

void BM_IsCompact(benchmark::State& state) {
  const FiniteAmst a = instance(static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(is_compact(a));
}
BENCHMARK(BM_IsCompact)->Args({4, 4})->Args({8, 8})->Args({8, 12});

void BM_InducedConsequence(benchmark::State& state) {
  const FiniteAmst a = instance(6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(induced_consequence(a));
}
BENCHMARK(BM_InducedConsequence)->Arg(6)->Arg(10)->Arg(12);

void BM_CanonicalConstruction(benchmark::State& state) {
  const LogicalStructure ls = induced_consequence(instance(6, 6));
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(canonical_normal_amst(ls));
    } catch (const Error&) {
      state.SkipWithError("degenerate structure");
      break;
    }
  }
}
BENCHMARK(BM_CanonicalConstruction);

void BM_CharacterizationReport(benchmark::State& state) {
  const FiniteAmst a = instance(3, 3, 5);
  SamplePlan plan;
  plan.samples = 40;
  for (auto _ : state) benchmark::DoNotOptimize(characterization_report(a, plan));
}
BENCHMARK(BM_CharacterizationReport);

void BM_TauN(benchmark::State& state) {
  FiniteAmst a = instance(6, 6);
  std::uint64_t s = 100;
  while (is_satisfiable(a, a.all_sentences())) a = instance(6, 6, ++s);
  for (auto _ : state) benchmark::DoNotOptimize(tau_n(a));
}
BENCHMARK(BM_TauN);

void BM_LosModels(benchmark::State& state) {
  FiniteAmst a = instance(4, 4);
  std::uint64_t s = 200;
  while (is_satisfiable(a, a.all_sentences())) a = instance(4, 4, ++s);
  const ModelSequence seq{3, {0, 1, 2}};
  const SetFamily u = principal_ultrafilter(3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(los_models(a, seq, u));
}
BENCHMARK(BM_LosModels);

void BM_SubbaseGeneration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(31);
  std::vector<Mask> sigma;
  Mask uni = 0;
  for (int j = 0; j < 5; ++j) {
    sigma.push_back(static_cast<Mask>(rng.next()) & full_mask(n));
    uni |= sigma.back();
  }
  if (uni != full_mask(n)) sigma.push_back(full_mask(n) & ~uni);
  for (auto _ : state) benchmark::DoNotOptimize(generate_from_subbase(n, sigma));
}
BENCHMARK(BM_SubbaseGeneration)->Arg(6)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "symf/characters.hpp"
#include "symf/hopf.hpp"
#include "symf/reps.hpp"
#include "symf/symfunc.hpp"
#include "symf/tableau.hpp"

using namespace symf;

namespace {

void BM_SchurToMonomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto parts = partitions_of(n);
  for (auto _ : state) {
    for (const auto& l : parts) benchmark::DoNotOptimize(convert(basis_element(BasisTag::S, l), BasisTag::M));
  }
}
BENCHMARK(BM_SchurToMonomial)->DenseRange(4, 10, 2);

void BM_CharacterTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(character_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CharacterTable)->DenseRange(4, 8, 2);

void BM_Kostka(benchmark::State& state) {
  const Partition lambda{4, 3, 2, 1};
  const Partition mu = Partition::column(10);
  for (auto _ : state) benchmark::DoNotOptimize(kostka(lambda, mu));
}
BENCHMARK(BM_Kostka);

void BM_Rsk(benchmark::State& state) {
  std::vector<int> word;
  for (int i = 0; i < state.range(0); ++i) word.push_back((i * 7) % 5 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(rsk(word));
}
BENCHMARK(BM_Rsk)->Range(8, 512);

void BM_Plethysm(benchmark::State& state) {
  const SymElement f = basis_element(BasisTag::H, Partition::row(static_cast<int>(state.range(0))));
  const SymElement g = basis_element(BasisTag::H, Partition{2});
  for (auto _ : state) benchmark::DoNotOptimize(plethysm(f, g));
}
BENCHMARK(BM_Plethysm)->DenseRange(2, 4);

void BM_SpechtModule(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specht_module(Partition{3, 2}));
}
BENCHMARK(BM_SpechtModule);

void BM_LittlewoodRichardson(benchmark::State& state) {
  const Partition lambda{4, 3, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(littlewood_richardson(lambda, Partition{2, 1}, Partition{3, 2, 2}));
}
BENCHMARK(BM_LittlewoodRichardson);

}  // namespace
BENCHMARK_MAIN();

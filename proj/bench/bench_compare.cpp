#include <benchmark/benchmark.h>

#include "witt/batch.hpp"
#include "witt/random.hpp"

using namespace witt;

namespace {

std::vector<CharacterVec> make_cases(unsigned p, unsigned e, std::size_t n, std::size_t count) {
  std::mt19937_64 rng(2024);
  const auto field = FqField::create(p, e);
  std::vector<CharacterVec> cases;
  for (std::size_t i = 0; i < count; ++i) cases.push_back(random_ramified_character(field, n, 9, rng));
  return cases;
}

void BM_CompareSerial(benchmark::State& state) {
  const auto cases = make_cases(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)), 2, 64);
  for (auto _ : state) benchmark::DoNotOptimize(compare_batch_serial(cases, 2));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cases.size()));
}

void BM_CompareParallel(benchmark::State& state) {
  const auto cases = make_cases(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)), 2, 64);
  for (auto _ : state) benchmark::DoNotOptimize(compare_batch_parallel(cases, 2));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cases.size()));
}

void BM_CompareDepthThree(benchmark::State& state) {
  const auto cases = make_cases(2, 1, 3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(compare_batch_parallel(cases, 3));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cases.size()));
}

}  // namespace

BENCHMARK(BM_CompareSerial)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompareParallel)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompareDepthThree)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

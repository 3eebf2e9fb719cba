// OpenMP kernels against their serial references. Run with
// OMP_NUM_THREADS set to compare thread counts.
#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ffarank/analysis.h"
#include "ffarank/metrics.h"

namespace ffarank {
namespace {

std::vector<RankOutcome> RandomOutcomes(int count, int n) {
  std::mt19937_64 rng(1);
  std::vector<RankOutcome> out;
  out.reserve(count);
  std::vector<int> pred(n), obs(n);
  for (int i = 0; i < count; ++i) {
    std::iota(pred.begin(), pred.end(), 1);
    std::iota(obs.begin(), obs.end(), 1);
    std::shuffle(obs.begin(), obs.end(), rng);
    out.push_back(MakeOutcome(pred, obs));
  }
  return out;
}

const std::vector<RankOutcome>& Outcomes() {
  static const auto outcomes = RandomOutcomes(5000, 100);
  return outcomes;
}

void BM_EvaluateBatch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(EvaluateBatch(Outcomes()));
  state.SetItemsProcessed(state.iterations() * Outcomes().size());
}

void BM_EvaluateBatchSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(EvaluateBatchSerial(Outcomes()));
  state.SetItemsProcessed(state.iterations() * Outcomes().size());
}

void BM_BinnedRanks(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(BinnedRanks(Outcomes(), 5));
  state.SetItemsProcessed(state.iterations() * Outcomes().size());
}

void BM_BinnedRanksSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(BinnedRanksSerial(Outcomes(), 5));
  state.SetItemsProcessed(state.iterations() * Outcomes().size());
}

BENCHMARK(BM_EvaluateBatch)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateBatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BinnedRanks)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BinnedRanksSerial)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ffarank

BENCHMARK_MAIN();

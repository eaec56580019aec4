#include <benchmark/benchmark.h>

#include "schubert/enumerate.hpp"
#include "schubert/padded.hpp"
#include "schubert/phi.hpp"
#include "schubert/verify.hpp"
#include "schubert/weak_order.hpp"

using namespace schubert;

namespace {

Permutation longest(int n) {
  std::vector<int> line;
  for (int i = n; i >= 1; --i) line.push_back(i);
  return Permutation::from_one_line(line);
}

void BM_EnumerateLongest(benchmark::State& state) {
  const auto w = longest(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(w));
}
BENCHMARK(BM_EnumerateLongest)->DenseRange(3, 6);

void BM_EnumerateRank6(benchmark::State& state) {
  const auto w = parse_permutation("1,4,3,6,5,2");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(w));
  state.counters["pipe_dreams"] = static_cast<double>(enumerate(w).size());
}
BENCHMARK(BM_EnumerateRank6);

void BM_PaddedSchubert(benchmark::State& state) {
  const auto w = parse_permutation("2,1,3,6,7,5,4");
  const auto pi = longest(7);
  for (auto _ : state) benchmark::DoNotOptimize(padded_schubert(w, pi));
}
BENCHMARK(BM_PaddedSchubert);

void BM_PhiAllMarks(benchmark::State& state) {
  const auto w = parse_permutation("1,4,3,2,5");
  const auto pi = longest(5);
  const auto pairs = delta_pairs(w, pi);
  for (auto _ : state)
    for (const auto& mpd : pairs) benchmark::DoNotOptimize(phi(mpd, pi));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}
BENCHMARK(BM_PhiAllMarks);

void BM_DeltaSweep(benchmark::State& state) {
  const auto pairs = weak_pairs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_delta(pairs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}
BENCHMARK(BM_DeltaSweep)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

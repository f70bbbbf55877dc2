// Serial reference vs OpenMP row-parallel benchmark harness, plus raw
// matcher throughput. The fixture excerpt is repeated to roughly the size
// of a full canticle trilogy (~0.5 MB).

#include <benchmark/benchmark.h>

#include <string>

#include "fbas/bench.hpp"

namespace {

using namespace fbas;

const Corpus& big_corpus() {
  static const Corpus corpus = [] {
    const Corpus excerpt = load_corpus(std::string(FBAS_DATA_DIR) + "/divina_excerpt.txt");
    Corpus c{.source_name = "excerpt x32"};
    for (int i = 0; i < 32; ++i) c.bytes += excerpt.bytes;
    return c;
  }();
  return corpus;
}

const PatternSet& patterns() {
  static const PatternSet set = load_patterns(std::string(FBAS_DATA_DIR) + "/patterns12.txt");
  return set;
}

void BM_RunBenchmarkSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_benchmark_serial(big_corpus(), patterns(), default_table()));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(big_corpus().length()) *
                          static_cast<int64_t>(patterns().patterns.size()));
}
BENCHMARK(BM_RunBenchmarkSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_RunBenchmarkParallel(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_benchmark(big_corpus(), patterns(), default_table(), MatchMode::kAllMatches, threads));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(big_corpus().length()) *
                          static_cast<int64_t>(patterns().patterns.size()));
}
BENCHMARK(BM_RunBenchmarkParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Search(benchmark::State& state) {
  const auto algo = static_cast<Algorithm>(state.range(0));
  const SearchQuery query{.text = big_corpus().bytes, .pattern = "canoscenza"};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_search(algo, query, default_table()));
  }
  state.SetLabel(to_string(algo));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(big_corpus().length()));
}
BENCHMARK(BM_Search)
    ->Arg(static_cast<int>(Algorithm::kNaive))
    ->Arg(static_cast<int>(Algorithm::kKmp))
    ->Arg(static_cast<int>(Algorithm::kBmh))
    ->Arg(static_cast<int>(Algorithm::kFbas));

}  // namespace

BENCHMARK_MAIN();

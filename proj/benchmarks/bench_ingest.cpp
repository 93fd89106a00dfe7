#include <benchmark/benchmark.h>

#include "punctnet/ingest.hpp"
#include "punctnet/rank_stats.hpp"
#include "support/synthetic.hpp"

using namespace punctnet;

namespace {

const std::string& text() {
  static const std::string t = [] {
    synth::SyntheticTextOptions opt;
    opt.tokens = 200'000;
    return synth::synthetic_text(opt);
  }();
  return t;
}

void BM_Clean(benchmark::State& state) {
  const auto cfg = CleaningConfig::english();
  for (auto _ : state) benchmark::DoNotOptimize(clean_text(text(), cfg));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text().size()));
}
BENCHMARK(BM_Clean)->Unit(benchmark::kMillisecond);

void BM_Tokenize(benchmark::State& state) {
  const std::string cleaned = clean_text(text(), CleaningConfig::english());
  for (auto _ : state) benchmark::DoNotOptimize(tokenize(cleaned));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(cleaned.size()));
}
BENCHMARK(BM_Tokenize)->Unit(benchmark::kMillisecond);

void BM_ZipfMandelbrotFit(benchmark::State& state) {
  const RankTable table = build_rank_table(ingest_text(text(), CleaningConfig::english()), true, false);
  for (auto _ : state) benchmark::DoNotOptimize(fit_zipf_mandelbrot(table, {1, 0}));
}
BENCHMARK(BM_ZipfMandelbrotFit)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

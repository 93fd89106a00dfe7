#include <benchmark/benchmark.h>

#include <map>
#include <numeric>

#include "punctnet/graph.hpp"
#include "punctnet/ingest.hpp"
#include "punctnet/metrics.hpp"
#include "support/synthetic.hpp"

using namespace punctnet;

namespace {

const EncodedCorpus& corpus(std::size_t tokens) {
  static std::map<std::size_t, EncodedCorpus> cache;
  auto it = cache.find(tokens);
  if (it == cache.end()) {
    const auto weights = synth::zipf_weights(tokens / 10, 1.0);
    it = cache.emplace(tokens, encode(synth::multinomial_corpus(weights, tokens, 5))).first;
  }
  return it->second;
}

const AdjacencyGraph& graph(std::size_t tokens) {
  static std::map<std::size_t, AdjacencyGraph> cache;
  auto it = cache.find(tokens);
  if (it == cache.end()) it = cache.emplace(tokens, build_graph(corpus(tokens), false)).first;
  return it->second;
}

void BM_BuildGraph(benchmark::State& state) {
  const auto& c = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(c, false));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildGraph)->Arg(10'000)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

std::vector<NodeId> first_sources(const AdjacencyGraph& g, std::size_t count) {
  std::vector<NodeId> s(std::min(count, g.node_count()));
  std::iota(s.begin(), s.end(), NodeId{0});
  return s;
}

void BM_SingleSourceBfs(benchmark::State& state) {
  const auto& g = graph(static_cast<std::size_t>(state.range(0)));
  const auto sources = first_sources(g, 256);
  for (auto _ : state)
    for (NodeId s : sources) benchmark::DoNotOptimize(distance_summary(g, s));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sources.size()));
}
BENCHMARK(BM_SingleSourceBfs)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_BatchedBfs(benchmark::State& state) {
  const auto& g = graph(static_cast<std::size_t>(state.range(0)));
  const auto sources = first_sources(g, 256);
  for (auto _ : state) benchmark::DoNotOptimize(distance_summaries(g, sources, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sources.size()));
}
BENCHMARK(BM_BatchedBfs)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_Triangles(benchmark::State& state) {
  const auto& g = graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(triangle_counts(g));
}
BENCHMARK(BM_Triangles)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_GlobalMetricsSampled(benchmark::State& state) {
  const auto& g = graph(1'000'000);
  GlobalOptions options;
  options.exact_budget = 0;
  options.sample_sources = static_cast<std::size_t>(state.range(0));
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(global_metrics(g, options));
}
BENCHMARK(BM_GlobalMetricsSampled)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include "punctnet/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <json.hpp>
#include <numeric>

#include "punctnet/parallel.hpp"
#include "punctnet/random.hpp"

namespace punctnet {

DistanceSummary distance_summary(const AdjacencyGraph& g, NodeId source) {
  constexpr std::uint32_t kUnseen = 0xffffffffu;
  std::vector<std::uint32_t> dist(g.node_count(), kUnseen);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  DistanceSummary out;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    const std::uint32_t next = dist[u] + 1;
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] != kUnseen) continue;
      dist[v] = next;
      out.distance_sum += next;
      ++out.reachable;
      queue.push_back(v);
    }
  }
  return out;
}

namespace {

constexpr std::size_t kBatch = 64;

struct MultiBfsWorkspace {
  std::vector<std::uint64_t> seen;
  std::vector<std::uint64_t> frontier;
  std::vector<std::uint64_t> next;
};

// Bit b of a node's mask stands for source b of the batch. Each level pulls
// frontier bits from the neighbours of every node still missing some source.
void multi_bfs(const AdjacencyGraph& g, std::span<const NodeId> batch, MultiBfsWorkspace& ws,
               std::span<DistanceSummary> out) {
  const std::size_t n = g.node_count();
  ws.seen.assign(n, 0);
  ws.frontier.assign(n, 0);
  ws.next.assign(n, 0);
  const std::uint64_t full = batch.size() == kBatch ? ~std::uint64_t{0}
                                                    : (std::uint64_t{1} << batch.size()) - 1;
  for (std::size_t b = 0; b < batch.size(); ++b) {
    ws.seen[batch[b]] |= std::uint64_t{1} << b;
    ws.frontier[batch[b]] |= std::uint64_t{1} << b;
    out[b] = {};
  }
  std::uint64_t level = 0;
  bool active = true;
  while (active) {
    ++level;
    active = false;
    for (std::size_t w = 0; w < n; ++w) {
      const std::uint64_t missing = full & ~ws.seen[w];
      if (missing == 0) {
        ws.next[w] = 0;
        continue;
      }
      std::uint64_t acc = 0;
      for (NodeId v : g.neighbors(static_cast<NodeId>(w))) {
        acc |= ws.frontier[v];
        if ((acc & missing) == missing) break;
      }
      std::uint64_t fresh = acc & missing;
      ws.next[w] = fresh;
      if (fresh == 0) continue;
      active = true;
      while (fresh) {
        const int b = std::countr_zero(fresh);
        out[b].distance_sum += level;
        ++out[b].reachable;
        fresh &= fresh - 1;
      }
    }
    for (std::size_t w = 0; w < n; ++w) ws.seen[w] |= ws.next[w];
    std::swap(ws.frontier, ws.next);
  }
}

}  // namespace

std::vector<DistanceSummary> distance_summaries(const AdjacencyGraph& g,
                                                std::span<const NodeId> sources,
                                                unsigned threads) {
  std::vector<DistanceSummary> out(sources.size());
  const std::size_t batches = (sources.size() + kBatch - 1) / kBatch;
  const unsigned workers = resolve_threads(threads);
  std::vector<MultiBfsWorkspace> spaces(std::min<std::size_t>(workers, std::max<std::size_t>(batches, 1)));
  parallel_for(batches, static_cast<unsigned>(spaces.size()), [&](std::size_t b, unsigned worker) {
    const std::size_t begin = b * kBatch;
    const std::size_t len = std::min(kBatch, sources.size() - begin);
    multi_bfs(g, sources.subspan(begin, len), spaces[worker],
              std::span<DistanceSummary>(out).subspan(begin, len));
  });
  return out;
}

std::optional<double> node_aspl(const AdjacencyGraph& g, NodeId i) {
  return distance_summary(g, i).mean();
}

std::vector<std::uint64_t> triangle_counts(const AdjacencyGraph& g) {
  const std::size_t n = g.node_count();
  // orient every edge towards the endpoint of higher (degree, id) order
  auto higher = [&g](NodeId a, NodeId b) {
    const auto da = g.degree(a);
    const auto db = g.degree(b);
    return da != db ? da < db : a < b;
  };
  std::vector<std::size_t> offsets(n + 1, 0);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : g.neighbors(u))
      if (higher(u, v)) ++offsets[u + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<NodeId> out_adj(offsets[n]);
  for (NodeId u = 0; u < n; ++u) {
    std::size_t pos = offsets[u];
    for (NodeId v : g.neighbors(u))
      if (higher(u, v)) out_adj[pos++] = v;
  }

  std::vector<std::uint64_t> triangles(n, 0);
  std::vector<NodeId> mark(n, static_cast<NodeId>(-1));
  for (NodeId u = 0; u < n; ++u) {
    for (std::size_t k = offsets[u]; k < offsets[u + 1]; ++k) mark[out_adj[k]] = u;
    for (std::size_t k = offsets[u]; k < offsets[u + 1]; ++k) {
      const NodeId v = out_adj[k];
      for (std::size_t t = offsets[v]; t < offsets[v + 1]; ++t) {
        const NodeId w = out_adj[t];
        if (mark[w] != u) continue;
        ++triangles[u];
        ++triangles[v];
        ++triangles[w];
      }
    }
  }
  return triangles;
}

double clustering_from_triangles(std::uint64_t triangles, std::size_t degree) {
  if (degree < 2) return 0.0;
  const auto k = static_cast<std::uint64_t>(degree);
  return static_cast<double>(2 * triangles) / static_cast<double>(k * (k - 1));
}

double node_lcc(const AdjacencyGraph& g, NodeId i) {
  const auto nb = g.neighbors(i);
  if (nb.size() < 2) return 0.0;
  // rows are sorted, so each neighbour's row is intersected by merging
  std::uint64_t links = 0;
  for (NodeId j : nb) {
    const auto other = g.neighbors(j);
    auto a = nb.begin();
    auto b = other.begin();
    while (a != nb.end() && b != other.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++links;
        ++a;
        ++b;
      }
    }
  }
  return clustering_from_triangles(links / 2, nb.size());
}

std::vector<double> local_clustering(const AdjacencyGraph& g) {
  const auto tri = triangle_counts(g);
  std::vector<double> out(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) out[i] = clustering_from_triangles(tri[i], g.degree(i));
  return out;
}

__extension__ using Wide = __int128;

std::optional<double> assortativity(const AdjacencyGraph& g) {
  // sums over directed edge ends, kept exact in 128-bit integers
  Wide ends = 0;
  Wide sum = 0;
  Wide sum_sq = 0;
  Wide sum_prod = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto ku = static_cast<Wide>(g.degree(u));
    for (NodeId v : g.neighbors(u)) {
      const auto kv = static_cast<Wide>(g.degree(v));
      ends += 1;
      sum += ku;
      sum_sq += ku * ku;
      sum_prod += ku * kv;
    }
  }
  const Wide numerator = ends * sum_prod - sum * sum;
  const Wide denominator = ends * sum_sq - sum * sum;
  if (ends == 0 || denominator == 0) return std::nullopt;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

GlobalMetrics global_metrics(const AdjacencyGraph& g, const GlobalOptions& options) {
  GlobalMetrics m;
  m.n = g.node_count();
  m.e = g.edge_count();
  if (m.n == 0) return m;

  std::vector<NodeId> sources(m.n);
  std::iota(sources.begin(), sources.end(), NodeId{0});
  if (m.n > options.exact_budget && options.sample_sources < m.n) {
    Rng rng = make_rng(options.seed, SeedStream::SourceSampling, 0);
    // partial Fisher-Yates: the first k slots become a uniform sample
    const std::size_t k = options.sample_sources;
    for (std::size_t i = 0; i < k; ++i) {
      const auto j = i + static_cast<std::size_t>(uniform_below(rng, m.n - i));
      std::swap(sources[i], sources[j]);
    }
    sources.resize(k);
    std::sort(sources.begin(), sources.end());
    m.L_sampled = true;
  }
  m.sources = sources.size();

  const auto summaries = distance_summaries(g, sources, options.threads);
  double sum = 0.0;
  double reach = 0.0;
  std::size_t defined = 0;
  std::vector<double> values;
  values.reserve(summaries.size());
  for (const auto& s : summaries) {
    if (m.n > 1) reach += static_cast<double>(s.reachable) / static_cast<double>(m.n - 1);
    if (s.reachable + 1 < m.n) m.disconnected = true;
    if (const auto l = s.mean()) {
      sum += *l;
      values.push_back(*l);
      ++defined;
    }
  }
  m.reachable_fraction = m.n > 1 ? reach / static_cast<double>(summaries.size()) : 1.0;
  if (defined > 0) {
    const double mean = sum / static_cast<double>(defined);
    m.L = mean;
    if (m.L_sampled && defined > 1) {
      double ss = 0.0;
      for (double v : values) ss += (v - mean) * (v - mean);
      m.L_stderr = std::sqrt(ss / static_cast<double>(defined - 1)) /
                   std::sqrt(static_cast<double>(defined));
    }
  }

  const auto tri = triangle_counts(g);
  double c_sum = 0.0;
  for (NodeId i = 0; i < m.n; ++i) c_sum += clustering_from_triangles(tri[i], g.degree(i));
  m.C = c_sum / static_cast<double>(m.n);
  m.r = assortativity(g);
  return m;
}

std::string global_metrics_json(const GlobalMetrics& m) {
  nlohmann::ordered_json j;
  j["n"] = m.n;
  j["e"] = m.e;
  j["L"] = m.L ? nlohmann::ordered_json(*m.L) : nlohmann::ordered_json(nullptr);
  j["L_over_ln_n"] = (m.L && m.n > 1) ? nlohmann::ordered_json(*m.L / std::log(static_cast<double>(m.n)))
                                      : nlohmann::ordered_json(nullptr);
  j["L_stderr"] = m.L_stderr;
  j["L_sampled"] = m.L_sampled;
  j["sources"] = m.sources;
  j["reachable_fraction"] = m.reachable_fraction;
  j["disconnected"] = m.disconnected;
  j["C"] = m.C;
  j["r"] = m.r ? nlohmann::ordered_json(*m.r) : nlohmann::ordered_json(nullptr);
  j["r_defined"] = m.r.has_value();
  return j.dump(2) + "\n";
}

}  // namespace punctnet

#include "punctnet/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "punctnet/error.hpp"

namespace punctnet {

TermId Vocabulary::intern(std::string_view surface) {
  auto it = index_.find(std::string(surface));
  if (it != index_.end()) return it->second;
  const auto id = static_cast<TermId>(surfaces_.size());
  surfaces_.emplace_back(surface);
  index_.emplace(surfaces_.back(), id);
  return id;
}

std::optional<TermId> Vocabulary::find(std::string_view surface) const {
  auto it = index_.find(std::string(surface));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EncodedCorpus encode(const Corpus& corpus) {
  auto vocab = std::make_shared<Vocabulary>();
  EncodedCorpus out;
  out.ids.reserve(corpus.size());
  for (const auto& t : corpus.tokens) out.ids.push_back(vocab->intern(t.surface));
  out.vocabulary = std::move(vocab);
  return out;
}

namespace {

constexpr std::uint64_t pair_key(NodeId a, NodeId b) {
  return a < b ? (std::uint64_t{a} << 32) | b : (std::uint64_t{b} << 32) | a;
}

}  // namespace

AdjacencyGraph AdjacencyGraph::from_sequence(std::span<const TermId> ids,
                                             std::shared_ptr<const Vocabulary> vocabulary,
                                             bool looped, std::optional<std::size_t> seam) {
  AdjacencyGraph g;
  g.vocabulary_ = std::move(vocabulary);
  constexpr NodeId kUnset = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> local(g.vocabulary_->size(), kUnset);
  std::vector<NodeId> seq;
  seq.reserve(ids.size());
  for (TermId t : ids) {
    if (local[t] == kUnset) {
      local[t] = static_cast<NodeId>(g.terms_.size());
      g.terms_.push_back(t);
      g.frequencies_.push_back(0);
    }
    ++g.frequencies_[local[t]];
    seq.push_back(local[t]);
  }

  std::vector<std::uint64_t> pairs;
  pairs.reserve(seq.size());
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    if (seam && *seam == k + 1) continue;
    pairs.push_back(pair_key(seq[k], seq[k + 1]));
  }
  if (looped && seq.size() >= 2) pairs.push_back(pair_key(seq.back(), seq.front()));
  g.build_from_pairs(pairs);
  return g;
}

AdjacencyGraph AdjacencyGraph::from_edges(std::vector<std::string> labels,
                                          std::span<const Edge> edges) {
  AdjacencyGraph g;
  auto vocab = std::make_shared<Vocabulary>();
  for (const auto& l : labels) {
    const TermId id = vocab->intern(l);
    if (id != g.terms_.size()) throw DataError("from_edges: duplicate label '" + l + "'");
    g.terms_.push_back(id);
  }
  g.vocabulary_ = std::move(vocab);
  std::vector<std::uint64_t> pairs;
  for (const auto& e : edges) {
    if (e.u >= g.terms_.size() || e.v >= g.terms_.size())
      throw DataError("from_edges: edge endpoint out of range");
    for (std::uint64_t k = 0; k < e.weight; ++k) pairs.push_back(pair_key(e.u, e.v));
  }
  g.build_from_pairs(pairs);
  g.frequencies_.resize(g.terms_.size());
  for (NodeId i = 0; i < g.terms_.size(); ++i) g.frequencies_[i] = (g.weighted_degree(i) + 1) / 2;
  return g;
}

void AdjacencyGraph::build_from_pairs(std::vector<std::uint64_t>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  const std::size_t n = terms_.size();
  loops_.assign(n, 0);

  struct Run {
    NodeId u, v;
    std::uint64_t weight;
  };
  std::vector<Run> runs;
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t k = 0; k < pairs.size();) {
    std::size_t end = k;
    while (end < pairs.size() && pairs[end] == pairs[k]) ++end;
    const auto u = static_cast<NodeId>(pairs[k] >> 32);
    const auto v = static_cast<NodeId>(pairs[k] & 0xffffffffULL);
    const std::uint64_t w = end - k;
    if (u == v) {
      loops_[u] = w;
    } else {
      runs.push_back({u, v, w});
      ++degree[u];
      ++degree[v];
    }
    k = end;
  }

  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  adjacency_.assign(offsets_[n], 0);
  weights_.assign(offsets_[n], 0);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // runs are sorted by (u, v) with u < v, which keeps every row sorted
  for (const auto& r : runs) {
    adjacency_[cursor[r.u]] = r.v;
    weights_[cursor[r.u]++] = r.weight;
    adjacency_[cursor[r.v]] = r.u;
    weights_[cursor[r.v]++] = r.weight;
  }
}

std::size_t AdjacencyGraph::self_loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(loops_.begin(), loops_.end(), [](std::uint64_t w) { return w > 0; }));
}

std::uint64_t AdjacencyGraph::weighted_degree(NodeId i) const {
  const auto w = weights(i);
  return std::accumulate(w.begin(), w.end(), std::uint64_t{0}) + 2 * loops_[i];
}

const std::string& AdjacencyGraph::label(NodeId i) const {
  return vocabulary_->surface(terms_[i]);
}

std::optional<NodeId> AdjacencyGraph::find(std::string_view surface) const {
  if (!vocabulary_) return std::nullopt;
  const auto term = vocabulary_->find(surface);
  if (!term) return std::nullopt;
  return node_of(*term);
}

std::optional<NodeId> AdjacencyGraph::node_of(TermId term) const {
  const auto it = std::find(terms_.begin(), terms_.end(), term);
  if (it == terms_.end()) return std::nullopt;
  return static_cast<NodeId>(it - terms_.begin());
}

std::vector<AdjacencyGraph::Edge> AdjacencyGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count() + self_loop_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    if (loops_[u] > 0) out.push_back({u, u, loops_[u]});
    const auto nb = neighbors(u);
    const auto w = weights(u);
    for (std::size_t k = 0; k < nb.size(); ++k)
      if (nb[k] > u) out.push_back({u, nb[k], w[k]});
  }
  return out;
}

AdjacencyGraph AdjacencyGraph::without_node(NodeId i) const {
  if (i >= node_count()) throw DataError("without_node: node id out of range");
  AdjacencyGraph g;
  g.vocabulary_ = vocabulary_;
  const std::size_t n = node_count() - 1;
  g.terms_.reserve(n);
  g.frequencies_.reserve(n);
  g.loops_.reserve(n);
  for (NodeId k = 0; k < node_count(); ++k) {
    if (k == i) continue;
    g.terms_.push_back(terms_[k]);
    g.frequencies_.push_back(frequencies_[k]);
    g.loops_.push_back(loops_[k]);
  }
  auto remap = [i](NodeId k) { return k > i ? k - 1 : k; };
  g.offsets_.assign(n + 1, 0);
  g.adjacency_.reserve(adjacency_.size() - 2 * degree(i));
  g.weights_.reserve(g.adjacency_.capacity());
  std::size_t row = 0;
  for (NodeId k = 0; k < node_count(); ++k) {
    if (k == i) continue;
    const auto nb = neighbors(k);
    const auto w = weights(k);
    for (std::size_t t = 0; t < nb.size(); ++t) {
      if (nb[t] == i) continue;
      g.adjacency_.push_back(remap(nb[t]));
      g.weights_.push_back(w[t]);
    }
    g.offsets_[++row] = g.adjacency_.size();
  }
  return g;
}

AdjacencyGraph build_graph(const EncodedCorpus& corpus, bool looped) {
  if (corpus.size() < 2) throw DataError("build_graph: corpus needs at least two tokens");
  return AdjacencyGraph::from_sequence(corpus.ids, corpus.vocabulary, looped);
}

AdjacencyGraph build_graph(const Corpus& corpus, bool looped) {
  if (corpus.size() < 2) throw DataError("build_graph: corpus needs at least two tokens");
  return build_graph(encode(corpus), looped);
}

AdjacencyGraph remove_node(const AdjacencyGraph& graph, std::string_view surface) {
  const auto node = graph.find(surface);
  if (!node) throw DataError("remove_node: unknown node '" + std::string(surface) + "'");
  return graph.without_node(*node);
}

std::vector<std::pair<std::size_t, std::size_t>> heaps_curve(const Corpus& corpus,
                                                             std::span<const std::size_t> sizes) {
  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });
  for (std::size_t s : sizes)
    if (s > corpus.size())
      throw DataError("heaps_curve: size " + std::to_string(s) + " exceeds corpus length " +
                      std::to_string(corpus.size()));

  std::vector<std::pair<std::size_t, std::size_t>> out(sizes.size());
  std::unordered_set<std::string_view> seen;
  std::size_t pos = 0;
  for (std::size_t idx : order) {
    while (pos < sizes[idx]) seen.insert(corpus.tokens[pos++].surface);
    out[idx] = {sizes[idx], seen.size()};
  }
  return out;
}

std::string edge_list_tsv(const AdjacencyGraph& graph) {
  std::string out;
  for (const auto& e : graph.edges()) {
    out += graph.label(e.u);
    out += '\t';
    out += graph.label(e.v);
    out += '\t';
    out += std::to_string(e.weight);
    out += '\n';
  }
  return out;
}

}  // namespace punctnet

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "punctnet/ingest.hpp"

namespace punctnet {

using TermId = std::uint32_t;
using NodeId = std::uint32_t;

/// Interned token surfaces shared by every graph built from one corpus.
class Vocabulary {
 public:
  TermId intern(std::string_view surface);
  std::optional<TermId> find(std::string_view surface) const;
  const std::string& surface(TermId id) const { return surfaces_[id]; }
  std::size_t size() const { return surfaces_.size(); }

 private:
  std::vector<std::string> surfaces_;
  std::unordered_map<std::string, TermId> index_;
};

/// A corpus as term ids over a shared vocabulary.
struct EncodedCorpus {
  std::shared_ptr<const Vocabulary> vocabulary;
  std::vector<TermId> ids;

  std::size_t size() const { return ids.size(); }
};

EncodedCorpus encode(const Corpus& corpus);

/// Word-adjacency network. Nodes are distinct tokens; an undirected edge
/// carries the number of times its endpoints were adjacent. Adjacency is
/// stored in compressed sparse rows with self-loops kept aside, so the
/// binary view (neighbors(), degree()) never contains a node itself.
class AdjacencyGraph {
 public:
  struct Edge {
    NodeId u = 0;  ///< u <= v
    NodeId v = 0;
    std::uint64_t weight = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  AdjacencyGraph() = default;

  /// One multiplicity increment per adjacent pair of `ids`. With `looped`
  /// the (last, first) pair is added too. When `seam` is set, the pair
  /// (ids[seam - 1], ids[seam]) is skipped.
  static AdjacencyGraph from_sequence(std::span<const TermId> ids,
                                      std::shared_ptr<const Vocabulary> vocabulary, bool looped,
                                      std::optional<std::size_t> seam = std::nullopt);

  /// Explicit construction (tests, benchmarks). Node i is labelled
  /// labels[i]; duplicate edges accumulate. Frequencies are set to half the
  /// weighted degree, rounded up.
  static AdjacencyGraph from_edges(std::vector<std::string> labels, std::span<const Edge> edges);

  std::size_t node_count() const { return terms_.size(); }
  /// Unique edges between distinct nodes (self-loops excluded).
  std::size_t edge_count() const { return adjacency_.size() / 2; }
  std::size_t self_loop_count() const;

  std::span<const NodeId> neighbors(NodeId i) const {
    return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
  }
  std::span<const std::uint64_t> weights(NodeId i) const {
    return {weights_.data() + offsets_[i], weights_.data() + offsets_[i + 1]};
  }
  std::uint64_t self_loop_weight(NodeId i) const { return loops_[i]; }

  /// Binary degree k_i: distinct neighbours other than i.
  std::size_t degree(NodeId i) const { return offsets_[i + 1] - offsets_[i]; }
  /// Weighted degree k_i^w; a self-loop contributes twice its multiplicity.
  std::uint64_t weighted_degree(NodeId i) const;
  /// Occurrences f_i of the node's token in the source sequence.
  std::uint64_t frequency(NodeId i) const { return frequencies_[i]; }

  const std::string& label(NodeId i) const;
  std::optional<NodeId> find(std::string_view surface) const;
  /// Node carrying vocabulary term `term`, if present.
  std::optional<NodeId> node_of(TermId term) const;
  const std::shared_ptr<const Vocabulary>& vocabulary() const { return vocabulary_; }

  /// All edges including self-loops, sorted by (u, v).
  std::vector<Edge> edges() const;

  /// Copy of the graph with node i and its incident edges removed; later
  /// node ids shift down by one.
  AdjacencyGraph without_node(NodeId i) const;

 private:
  void build_from_pairs(std::vector<std::uint64_t>& pairs);

  std::shared_ptr<const Vocabulary> vocabulary_;
  std::vector<TermId> terms_;
  std::vector<std::uint64_t> frequencies_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::uint64_t> loops_;
};

/// Throws DataError for corpora shorter than two tokens.
AdjacencyGraph build_graph(const Corpus& corpus, bool looped);
AdjacencyGraph build_graph(const EncodedCorpus& corpus, bool looped);

/// Throws DataError when the surface is not a node.
AdjacencyGraph remove_node(const AdjacencyGraph& graph, std::string_view surface);

/// Vocabulary size n(s) of the first s tokens for each requested s.
std::vector<std::pair<std::size_t, std::size_t>> heaps_curve(const Corpus& corpus,
                                                             std::span<const std::size_t> sizes);

/// "surface_i<TAB>surface_j<TAB>multiplicity" per edge, self-loops included.
std::string edge_list_tsv(const AdjacencyGraph& graph);

}  // namespace punctnet

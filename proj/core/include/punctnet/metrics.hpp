#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "punctnet/graph.hpp"

namespace punctnet {

/// Breadth-first distance totals from one source on the binary view.
struct DistanceSummary {
  std::uint64_t distance_sum = 0;
  std::size_t reachable = 0;  ///< other nodes reachable from the source

  /// Mean distance to the reachable nodes; nullopt when none is reachable.
  std::optional<double> mean() const {
    if (reachable == 0) return std::nullopt;
    return static_cast<double>(distance_sum) / static_cast<double>(reachable);
  }
};

/// Single-source BFS.
DistanceSummary distance_summary(const AdjacencyGraph& g, NodeId source);

/// Distance totals for many sources at once. Sources are processed 64 at a
/// time with bitset frontiers; results follow the order of `sources`.
std::vector<DistanceSummary> distance_summaries(const AdjacencyGraph& g,
                                                std::span<const NodeId> sources,
                                                unsigned threads = 0);

/// Average shortest-path length of node i over the nodes it can reach
/// (all n - 1 others in a connected graph); nullopt for an isolated node.
std::optional<double> node_aspl(const AdjacencyGraph& g, NodeId i);

/// e_i: binary edges among the distinct neighbours of every node, i.e. the
/// number of triangles through it. Self-loops never count.
std::vector<std::uint64_t> triangle_counts(const AdjacencyGraph& g);

/// C_i = 2 e_i / (k_i (k_i - 1)); 0 when k_i < 2.
double clustering_from_triangles(std::uint64_t triangles, std::size_t degree);

double node_lcc(const AdjacencyGraph& g, NodeId i);
std::vector<double> local_clustering(const AdjacencyGraph& g);

/// Newman degree assortativity: Pearson correlation of binary degrees over
/// both orientations of every non-loop edge. nullopt when the degree
/// variance over edge ends is zero (or there are no edges).
std::optional<double> assortativity(const AdjacencyGraph& g);

struct GlobalOptions {
  /// Graphs with at most this many nodes get BFS from every node.
  std::size_t exact_budget = 20000;
  /// Sources drawn uniformly without replacement above the budget.
  std::size_t sample_sources = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct GlobalMetrics {
  std::size_t n = 0;
  std::size_t e = 0;
  /// Mean of l_i over the BFS sources; nullopt when no source reaches anything.
  std::optional<double> L;
  /// Standard error of L (0 when every node was a source).
  double L_stderr = 0.0;
  bool L_sampled = false;
  std::size_t sources = 0;
  /// Mean over sources of reachable / (n - 1).
  double reachable_fraction = 1.0;
  bool disconnected = false;
  /// Mean of C_i over all nodes.
  double C = 0.0;
  std::optional<double> r;
};

GlobalMetrics global_metrics(const AdjacencyGraph& g, const GlobalOptions& options = {});

std::string global_metrics_json(const GlobalMetrics& m);

}  // namespace punctnet

#include <gtest/gtest.h>

#include <numeric>

#include "oracles/graph_oracle.hpp"
#include "punctnet/metrics.hpp"
#include "support/synthetic.hpp"

using namespace punctnet;
using Edge = AdjacencyGraph::Edge;

namespace {

std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

AdjacencyGraph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.push_back({0, i, 1});
  return AdjacencyGraph::from_edges(labels(leaves + 1), edges);
}

AdjacencyGraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    const NodeId j = static_cast<NodeId>((i + 1) % n);
    edges.push_back({std::min(i, j), std::max(i, j), 1});
  }
  return AdjacencyGraph::from_edges(labels(n), edges);
}

}  // namespace

TEST(NodeAspl, PathAndStar) {
  const std::vector<Edge> path{{0, 1, 1}, {1, 2, 1}};
  const AdjacencyGraph g = AdjacencyGraph::from_edges(labels(3), path);
  EXPECT_EQ(node_aspl(g, 0), 1.5);
  EXPECT_EQ(node_aspl(star(7), 0), 1.0);
}

TEST(NodeAspl, IsolatedNodeIsUndefined) {
  const std::vector<Edge> edges{{0, 1, 1}, {2, 2, 3}};
  const AdjacencyGraph g = AdjacencyGraph::from_edges(labels(3), edges);
  EXPECT_FALSE(node_aspl(g, 2).has_value());
}

TEST(NodeLcc, TriangleAndStar) {
  const std::vector<Edge> tri{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
  const AdjacencyGraph g = AdjacencyGraph::from_edges(labels(3), tri);
  for (NodeId i = 0; i < 3; ++i) EXPECT_EQ(node_lcc(g, i), 1.0);
  EXPECT_EQ(node_lcc(star(5), 0), 0.0);
  EXPECT_EQ(node_lcc(star(5), 1), 0.0);
}

TEST(Assortativity, StarIsPerfectlyDisassortative) {
  EXPECT_EQ(assortativity(star(4)), -1.0);
}

TEST(Assortativity, ConstantDegreeIsUndefined) {
  EXPECT_FALSE(assortativity(cycle(5)).has_value());
  EXPECT_FALSE(global_metrics(cycle(5)).r.has_value());
  EXPECT_FALSE(assortativity(AdjacencyGraph::from_edges(labels(2), {})).has_value());
}

TEST(GlobalMetrics, MatchBruteForceOracles) {
  Rng rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 50);
    const double density = 0.02 + 0.3 * static_cast<double>(uniform_below(rng, 1000)) / 1000.0;
    const auto rg = oracle::random_graph(n, density, rng);
    const AdjacencyGraph g = AdjacencyGraph::from_edges(rg.labels, rg.edges);
    ASSERT_EQ(g.node_count(), n);
    const auto dist = oracle::floyd_warshall(rg.dense);

    double l_sum = 0.0;
    std::size_t l_count = 0;
    double c_sum = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      ASSERT_EQ(g.label(i), rg.labels[i]);
      const auto expected_l = oracle::aspl(dist, i);
      EXPECT_EQ(node_aspl(g, i), expected_l) << "trial " << trial << " node " << i;
      const double expected_c = oracle::clustering(rg.dense, i);
      EXPECT_EQ(node_lcc(g, i), expected_c) << "trial " << trial << " node " << i;
      if (expected_l) {
        l_sum += *expected_l;
        ++l_count;
      }
      c_sum += expected_c;
    }
    const GlobalMetrics m = global_metrics(g);
    EXPECT_EQ(m.n, n);
    EXPECT_EQ(m.e, g.edge_count());
    if (l_count > 0) {
      EXPECT_EQ(m.L, l_sum / static_cast<double>(l_count)) << "trial " << trial;
    } else {
      EXPECT_FALSE(m.L.has_value());
    }
    EXPECT_EQ(m.C, c_sum / static_cast<double>(n)) << "trial " << trial;
    EXPECT_EQ(m.r, oracle::assortativity(rg.dense)) << "trial " << trial;
    EXPECT_EQ(local_clustering(g).size(), n);
  }
}

TEST(DistanceSummaries, BatchedSearchMatchesSingleSource) {
  Rng rng(99);
  const auto rg = oracle::random_graph(300, 0.01, rng);
  const AdjacencyGraph g = AdjacencyGraph::from_edges(rg.labels, rg.edges);
  std::vector<NodeId> sources(g.node_count());
  std::iota(sources.begin(), sources.end(), NodeId{0});
  for (unsigned threads : {1u, 3u}) {
    const auto batch = distance_summaries(g, sources, threads);
    for (NodeId s = 0; s < g.node_count(); ++s) {
      const auto single = distance_summary(g, s);
      EXPECT_EQ(batch[s].distance_sum, single.distance_sum);
      EXPECT_EQ(batch[s].reachable, single.reachable);
    }
  }
}

TEST(GlobalMetrics, DisconnectedGraphUsesReachableNodes) {
  const std::vector<Edge> edges{{0, 1, 1}, {2, 3, 1}, {3, 4, 1}};
  const GlobalMetrics m = global_metrics(AdjacencyGraph::from_edges(labels(5), edges));
  EXPECT_TRUE(m.disconnected);
  EXPECT_LT(m.reachable_fraction, 1.0);
  // l: 1, 1, 1.5, 1, 1.5
  EXPECT_DOUBLE_EQ(*m.L, 6.0 / 5.0);
}

TEST(GlobalMetrics, SamplingEveryNodeEqualsExact) {
  Rng rng(3);
  const auto rg = oracle::random_graph(120, 0.05, rng);
  const AdjacencyGraph g = AdjacencyGraph::from_edges(rg.labels, rg.edges);
  GlobalOptions exact;
  GlobalOptions sampled;
  sampled.exact_budget = 10;
  sampled.sample_sources = g.node_count();
  const auto a = global_metrics(g, exact);
  const auto b = global_metrics(g, sampled);
  EXPECT_EQ(a.L, b.L);
  EXPECT_FALSE(a.L_sampled);
}

TEST(GlobalMetrics, SampledEstimateIsSeededAndReportsError) {
  Rng rng(8);
  const auto rg = oracle::random_graph(400, 0.02, rng);
  const AdjacencyGraph g = AdjacencyGraph::from_edges(rg.labels, rg.edges);
  GlobalOptions o;
  o.exact_budget = 100;
  o.sample_sources = 150;
  o.seed = 5;
  const auto a = global_metrics(g, o);
  const auto b = global_metrics(g, o);
  EXPECT_TRUE(a.L_sampled);
  EXPECT_EQ(a.sources, 150u);
  EXPECT_EQ(a.L, b.L);
  EXPECT_GT(a.L_stderr, 0.0);
  const auto exact = global_metrics(g);
  EXPECT_NEAR(*a.L, *exact.L, 5 * a.L_stderr);
}

TEST(GlobalMetrics, JsonCarriesUndefinedFlag) {
  const std::string j = global_metrics_json(global_metrics(cycle(5)));
  EXPECT_NE(j.find("\"r\": null"), std::string::npos);
  EXPECT_NE(j.find("\"r_defined\": false"), std::string::npos);
}

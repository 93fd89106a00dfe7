#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "punctnet/error.hpp"
#include "punctnet/graph.hpp"
#include "punctnet/random.hpp"
#include "support/synthetic.hpp"

using namespace punctnet;
using Edge = AdjacencyGraph::Edge;

namespace {

Corpus words(std::initializer_list<const char*> surfaces) {
  Corpus c;
  for (const char* s : surfaces) c.tokens.push_back({s, kind_of_surface(s)});
  c.sources.push_back({"t", 0, c.tokens.size()});
  return c;
}

Corpus from_tokens(std::vector<Token> tokens) {
  Corpus c;
  c.tokens = std::move(tokens);
  c.sources.push_back({"t", 0, c.tokens.size()});
  return c;
}

/// Multiplicities keyed by label pair, counted straight from the sequence.
std::map<std::pair<std::string, std::string>, std::uint64_t> pair_counts(const Corpus& c,
                                                                         bool looped) {
  std::map<std::pair<std::string, std::string>, std::uint64_t> out;
  auto add = [&](const std::string& a, const std::string& b) {
    ++out[a < b ? std::pair{a, b} : std::pair{b, a}];
  };
  for (std::size_t i = 0; i + 1 < c.size(); ++i) add(c.tokens[i].surface, c.tokens[i + 1].surface);
  if (looped) add(c.tokens.back().surface, c.tokens.front().surface);
  return out;
}

std::map<std::pair<std::string, std::string>, std::uint64_t> graph_edges(const AdjacencyGraph& g) {
  std::map<std::pair<std::string, std::string>, std::uint64_t> out;
  for (const Edge& e : g.edges()) {
    const std::string& a = g.label(e.u);
    const std::string& b = g.label(e.v);
    out[a < b ? std::pair{a, b} : std::pair{b, a}] = e.weight;
  }
  return out;
}

}  // namespace

TEST(BuildGraph, OpenSequence) {
  const AdjacencyGraph g = build_graph(words({"a", "b", "a"}), false);
  ASSERT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.self_loop_count(), 0u);
  const NodeId a = *g.find("a");
  const NodeId b = *g.find("b");
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0].weight, 2u);
  EXPECT_EQ(g.weighted_degree(a), 2u);
  EXPECT_EQ(g.weighted_degree(b), 2u);
  EXPECT_EQ(g.frequency(a), 2u);
}

TEST(BuildGraph, LoopedSequence) {
  const AdjacencyGraph g = build_graph(words({"a", "b", "a"}), true);
  const NodeId a = *g.find("a");
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.self_loop_weight(a), 1u);
  EXPECT_EQ(g.degree(a), 1u);
  EXPECT_EQ(g.weighted_degree(a), 4u);
  EXPECT_EQ(g.weighted_degree(a), 2 * g.frequency(a));
}

TEST(BuildGraph, TooShortIsAnError) {
  EXPECT_THROW(build_graph(words({"a"}), false), DataError);
  EXPECT_THROW(build_graph(Corpus{}, true), DataError);
}

TEST(BuildGraph, TwoTokens) {
  const AdjacencyGraph g = build_graph(words({"x", "y"}), false);
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(BuildGraph, SeamPairIsSkipped) {
  const Corpus c = words({"a", "b", "c", "d"});
  const EncodedCorpus enc = encode(c);
  const AdjacencyGraph g = AdjacencyGraph::from_sequence(enc.ids, enc.vocabulary, false, 2);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_FALSE(graph_edges(g).contains({"b", "c"}));
}

TEST(BuildGraph, LoopedDegreeIdentityProperty) {
  Rng rng(20240601);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t length = 2 + uniform_below(rng, 499);
    const std::size_t alphabet = 1 + uniform_below(rng, 60);
    const Corpus c = from_tokens(synth::random_tokens(length, alphabet, rng));
    const AdjacencyGraph g = build_graph(c, true);
    std::uint64_t total = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
      ASSERT_EQ(g.weighted_degree(i), 2 * g.frequency(i)) << "trial " << trial;
      total += g.frequency(i);
    }
    EXPECT_EQ(total, length);
  }
}

TEST(BuildGraph, MatchesDirectPairCountsAndHandshake) {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const bool looped = trial % 2 == 0;
    const Corpus c = from_tokens(synth::random_tokens(2 + uniform_below(rng, 300), 40, rng));
    const AdjacencyGraph g = build_graph(c, looped);
    EXPECT_EQ(graph_edges(g), pair_counts(c, looped));

    std::set<std::string> vocab;
    for (const auto& t : c.tokens) vocab.insert(t.surface);
    EXPECT_EQ(g.node_count(), vocab.size());

    std::size_t degree_sum = 0;
    std::uint64_t weighted_sum = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
      degree_sum += g.degree(i);
      weighted_sum += g.weighted_degree(i);
      const auto nb = g.neighbors(i);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      EXPECT_EQ(std::find(nb.begin(), nb.end(), i), nb.end());
    }
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
    EXPECT_EQ(weighted_sum, 2 * (c.size() - 1 + (looped ? 1 : 0)));
  }
}

TEST(RemoveNode, TriangleMinusOne) {
  const std::vector<Edge> edges{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
  const AdjacencyGraph g = AdjacencyGraph::from_edges({"a", "b", "c"}, edges);
  const AdjacencyGraph h = remove_node(g, "b");
  EXPECT_EQ(h.node_count(), 2u);
  EXPECT_EQ(h.edge_count(), 1u);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(RemoveNode, StarMinusCentre) {
  const std::vector<Edge> edges{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}};
  const AdjacencyGraph h = remove_node(AdjacencyGraph::from_edges({"c", "l1", "l2", "l3", "l4"}, edges), "c");
  EXPECT_EQ(h.node_count(), 4u);
  EXPECT_EQ(h.edge_count(), 0u);
  for (NodeId i = 0; i < h.node_count(); ++i) EXPECT_EQ(h.degree(i), 0u);
}

TEST(RemoveNode, UnknownNodeIsAnError) {
  const AdjacencyGraph g = build_graph(words({"a", "b"}), false);
  EXPECT_THROW(remove_node(g, "zzz"), DataError);
}

TEST(RemoveNode, DropsExactlyTheIncidentEdges) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Corpus c = from_tokens(synth::random_tokens(200, 30, rng));
    const AdjacencyGraph g = build_graph(c, true);
    const std::string victim = g.label(static_cast<NodeId>(uniform_below(rng, g.node_count())));
    auto expected = graph_edges(g);
    std::erase_if(expected, [&](const auto& kv) {
      return kv.first.first == victim || kv.first.second == victim;
    });
    const AdjacencyGraph h = remove_node(g, victim);
    EXPECT_EQ(graph_edges(h), expected);
    EXPECT_EQ(h.node_count(), g.node_count() - 1);
    EXPECT_FALSE(h.find(victim).has_value());
    for (NodeId i = 0; i < h.node_count(); ++i)
      EXPECT_EQ(h.frequency(i), g.frequency(*g.find(h.label(i))));
  }
}

TEST(HeapsCurve, SpecCases) {
  const std::vector<std::size_t> sizes{1, 4};
  const auto curve = heaps_curve(words({"a", "a", "a", "a"}), sizes);
  EXPECT_EQ(curve, (std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {4, 1}}));
  const std::vector<std::size_t> all{1, 2, 3, 5};
  const auto distinct = heaps_curve(words({"a", "b", "c", "d", "e"}), all);
  for (const auto& [s, n] : distinct) EXPECT_EQ(n, s);
  const std::vector<std::size_t> too_big{6};
  EXPECT_THROW(heaps_curve(words({"a", "b", "c", "d", "e"}), too_big), DataError);
}

TEST(HeapsCurve, ConcaveOnZipfText) {
  const Corpus c = synth::multinomial_corpus(synth::zipf_weights(50000, 1.0), 200000, 4);
  const std::vector<std::size_t> sizes{25000, 50000, 100000, 200000};
  const auto curve = heaps_curve(c, sizes);
  for (std::size_t k = 1; k + 1 < curve.size(); ++k) {
    const double left = static_cast<double>(curve[k].second - curve[k - 1].second) /
                        static_cast<double>(curve[k].first - curve[k - 1].first);
    const double right = static_cast<double>(curve[k + 1].second - curve[k].second) /
                         static_cast<double>(curve[k + 1].first - curve[k].first);
    EXPECT_LT(right, left);
  }
  EXPECT_LT(curve.back().second, curve.back().first);
}

TEST(EdgeList, FormatIsDeterministic) {
  const Corpus c = words({"a", "b", "a", "a", "#com"});
  const std::string tsv = edge_list_tsv(build_graph(c, false));
  EXPECT_EQ(tsv, edge_list_tsv(build_graph(c, false)));
  EXPECT_NE(tsv.find("a\tb\t2\n"), std::string::npos);
  EXPECT_NE(tsv.find("a\ta\t1\n"), std::string::npos);
  EXPECT_NE(tsv.find("a\t#com\t1\n"), std::string::npos);
}

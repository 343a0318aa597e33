#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "evg/errors.hpp"
#include "evg/flatten.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace evg {
namespace {

using test::at;
using test::three_slice;
using Pair = std::pair<TemporalNode, TemporalNode>;

std::vector<Pair> as_pairs(const StaticExpansion& x, const std::vector<ExpansionEdge>& edges) {
  std::vector<Pair> out;
  for (const auto& e : edges) out.push_back({x.active_nodes()[e.from], x.active_nodes()[e.to]});
  return out;
}

TEST(Expand, ThreeSlice) {
  const EvolvingGraph g = three_slice();
  const StaticExpansion x = expand(g);
  EXPECT_EQ(std::vector<TemporalNode>(x.active_nodes().begin(), x.active_nodes().end()),
            (std::vector<TemporalNode>{at(g, "1", 1), at(g, "2", 1), at(g, "1", 2), at(g, "3", 2),
                                       at(g, "2", 3), at(g, "3", 3)}));
  const std::vector<ExpansionEdge> stat(x.static_edges().begin(), x.static_edges().end());
  EXPECT_EQ(as_pairs(x, stat), (std::vector<Pair>{{at(g, "1", 1), at(g, "2", 1)},
                                                 {at(g, "1", 2), at(g, "3", 2)},
                                                 {at(g, "2", 3), at(g, "3", 3)}}));
  // The causal edge for node 2 starts at its active copy (2,t1).
  EXPECT_EQ(as_pairs(x, x.causal_edges()), (std::vector<Pair>{{at(g, "1", 1), at(g, "1", 2)},
                                                             {at(g, "2", 1), at(g, "2", 3)},
                                                             {at(g, "3", 2), at(g, "3", 3)}}));
  EXPECT_EQ(x.causal_edge_count(), 3u);
  EXPECT_EQ(x.index_of(at(g, "3", 2)), 3u);
  EXPECT_FALSE(x.index_of(at(g, "2", 2)).has_value());
}

TEST(Expand, SingleEdge) {
  const std::vector<EdgeRecord> records{{"1", "2", 1}};
  const StaticExpansion x = expand(build_graph(records, Directedness::Directed));
  EXPECT_EQ(x.size(), 2u);
  EXPECT_EQ(x.static_edges().size(), 1u);
  EXPECT_TRUE(x.causal_edges().empty());
}

TEST(Expand, ThreeActiveTimesGiveThreeCausalEdges) {
  const std::vector<EdgeRecord> records{{"a", "v", 1}, {"b", "v", 2}, {"c", "v", 3}};
  const EvolvingGraph g = build_graph(records, Directedness::Directed);
  const StaticExpansion x = expand(g);
  EXPECT_EQ(x.causal_edge_count(), 3u);
  const TemporalNode v1 = at(g, "v", 1), v2 = at(g, "v", 2), v3 = at(g, "v", 3);
  EXPECT_EQ(as_pairs(x, x.causal_edges()), (std::vector<Pair>{{v1, v2}, {v1, v3}, {v2, v3}}));
}

TEST(Expand, UndirectedEdgesBecomeTwoArcs) {
  const std::vector<EdgeRecord> records{{"1", "2", 1}, {"2", "3", 1}};
  const StaticExpansion x = expand(build_graph(records, Directedness::Undirected));
  EXPECT_EQ(x.static_edges().size(), 4u);
}

TEST(StaticBfs, ThreeSlice) {
  const EvolvingGraph g = three_slice();
  const StaticExpansion x = expand(g);
  EXPECT_EQ(static_bfs(x, at(g, "1", 1)), bfs(g, at(g, "1", 1)));
  const ReachedMap sink = static_bfs(x, at(g, "3", 3));
  ASSERT_EQ(sink.size(), 1u);
  EXPECT_EQ(sink.find(at(g, "3", 3)), 0u);
  EXPECT_THROW(static_bfs(x, at(g, "2", 2)), InactiveRootError);
}

TEST(WriteExpansionEdges, ThreeSlice) {
  const EvolvingGraph g = three_slice();
  std::ostringstream out;
  write_expansion_edges(expand(g), g, out);
  EXPECT_EQ(out.str(),
            "STATIC\t1@1\t2@1\n"
            "STATIC\t1@2\t3@2\n"
            "STATIC\t2@3\t3@3\n"
            "CAUSAL\t1@1\t1@2\n"
            "CAUSAL\t2@1\t2@3\n"
            "CAUSAL\t3@2\t3@3\n");
}

class FlattenProperty : public ::testing::TestWithParam<int> {};

TEST_P(FlattenProperty, StructureAndOracleIdentity) {
  std::mt19937_64 rng(4000 + GetParam());
  const oracle::RawGraph raw = oracle::random_raw(rng, 8, 5, 25);
  const EvolvingGraph g = oracle::build(raw);
  const StaticExpansion x = expand(g);

  const auto active = oracle::active_nodes(raw);
  ASSERT_EQ(std::vector<TemporalNode>(x.active_nodes().begin(), x.active_nodes().end()), active);
  for (std::uint32_t i = 0; i < x.size(); ++i) EXPECT_EQ(x.index_of(active[i]), i);

  std::size_t expected_causal = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::size_t a = g.active_times(v).size();
    expected_causal += a * (a - (a > 0)) / 2;
  }
  const auto causal = x.causal_edges();
  EXPECT_EQ(causal.size(), expected_causal);
  EXPECT_EQ(x.causal_edge_count(), expected_causal);

  std::vector<std::vector<int>> adjacency(x.size(), std::vector<int>(x.size(), 0));
  for (const auto& [u, v] : as_pairs(x, {x.static_edges().begin(), x.static_edges().end()})) {
    EXPECT_EQ(u.time, v.time);
    EXPECT_NE(u.node, v.node);
    ++adjacency[*x.index_of(u)][*x.index_of(v)];
  }
  for (const auto& [u, v] : as_pairs(x, causal)) {
    EXPECT_EQ(u.node, v.node);
    EXPECT_LT(u.time, v.time);
    ++adjacency[*x.index_of(u)][*x.index_of(v)];
  }
  // Every pair appears at most once across both sets and the union is
  // exactly the one-step relation.
  EXPECT_EQ(adjacency, oracle::expansion_matrix(raw));

  for (const TemporalNode root : active) EXPECT_EQ(static_bfs(x, root), bfs(g, root));
}

INSTANTIATE_TEST_SUITE_P(RandomSmallGraphs, FlattenProperty, ::testing::Range(0, 40));

}  // namespace
}  // namespace evg

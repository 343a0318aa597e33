#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "evg/algebra.hpp"
#include "evg/flatten.hpp"
#include "evg/generator.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace evg {
namespace {

using test::at;
using test::three_slice;
using Counts = std::vector<PathCount>;

// Values of a block vector on the active nodes, in (time, node) order.
Counts on_active(const EvolvingGraph& g, const CountVector& b) {
  Counts out;
  const StaticExpansion x = expand(g);
  for (const TemporalNode& tn : x.active_nodes()) out.push_back(b[tn]);
  return out;
}

TEST(CausalPropagate, ThreeSlice) {
  const EvolvingGraph g = three_slice();
  const NodeId n1 = *g.node_of("1"), n3 = *g.node_of("3");
  Counts e1(3, 0), e3(3, 0);
  e1[n1] = 1;
  e3[n3] = 1;
  EXPECT_EQ(causal_propagate(g, e1, 0, 1), e1);
  EXPECT_EQ(causal_propagate(g, e3, 0, 1), Counts(3, 0));
  EXPECT_EQ(causal_propagate(g, Counts(3, 0), 0, 2), Counts(3, 0));
  EXPECT_EQ(causal_propagate(g, e3, 1, 2), e3);
  EXPECT_THROW(causal_propagate(g, e1, 1, 1), TimeOrderError);
  EXPECT_THROW(causal_propagate(g, e1, 2, 0), TimeOrderError);
  EXPECT_THROW(causal_propagate(g, Counts(2, 0), 0, 1), ShapeError);
}

TEST(Odot, KeepsActiveEntriesOnly) {
  const EvolvingGraph g = three_slice();
  const NodeId n1 = *g.node_of("1"), n2 = *g.node_of("2"), n3 = *g.node_of("3");
  Counts b(3, 0);
  b[n1] = 5;
  b[n2] = 7;
  b[n3] = 9;
  Counts t2(3, 0);
  t2[n1] = 5;
  t2[n3] = 9;
  EXPECT_EQ(odot(g, 1, b), t2);
  Counts t3(3, 0);
  t3[n2] = 7;
  t3[n3] = 9;
  EXPECT_EQ(odot(g, 2, b), t3);
  EXPECT_THROW(odot(g, 3, b), ShapeError);
}

TEST(BlockMatvec, ThreeSliceIterates) {
  const EvolvingGraph g = three_slice();
  CountVector b = CountVector::indicator(3, 3, at(g, "1", 1));
  const std::vector<Counts> expected{{0, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 2}};
  for (const Counts& want : expected) {
    const CountVector dense = dense_reference_matvec(g, b);
    b = block_matvec(g, b);
    EXPECT_EQ(on_active(g, b), want);
    EXPECT_EQ(b, dense);
  }
  b = block_matvec(g, b);
  EXPECT_TRUE(b.is_zero());
  EXPECT_TRUE(block_matvec(g, CountVector(3, 3)).is_zero());
  EXPECT_THROW(block_matvec(g, CountVector(2, 3)), ShapeError);
  EXPECT_THROW(block_matvec(g, CountVector(3, 4)), ShapeError);
}

TEST(BlockMatvec, InactiveEntriesAreIgnored) {
  const EvolvingGraph g = three_slice();
  const CountVector b = CountVector::indicator(3, 3, at(g, "3", 1));
  EXPECT_TRUE(block_matvec(g, b).is_zero());
}

TEST(AlgebraicBfs, ThreeSlice) {
  const EvolvingGraph g = three_slice();
  EXPECT_EQ(algebraic_bfs(g, at(g, "1", 2)), bfs(g, at(g, "1", 2)));
  const ReachedMap m = algebraic_bfs(g, at(g, "1", 1));
  EXPECT_EQ(m, bfs(g, at(g, "1", 1)));
  EXPECT_EQ(m.iterations(), 4u);
  EXPECT_THROW(algebraic_bfs(g, at(g, "2", 2)), InactiveRootError);
}

TEST(CountTemporalPaths, ThreeSlice) {
  const EvolvingGraph g = three_slice();
  EXPECT_EQ(count_temporal_paths(g, at(g, "1", 1), at(g, "3", 3), 3), 2u);
  EXPECT_EQ(count_temporal_paths(g, at(g, "1", 1), at(g, "3", 3), 2), 0u);
  EXPECT_EQ(count_temporal_paths(g, at(g, "1", 1), at(g, "3", 3), 4), 0u);
  EXPECT_EQ(count_temporal_paths(g, at(g, "1", 1), at(g, "1", 1), 0), 1u);
  EXPECT_EQ(count_temporal_paths(g, at(g, "1", 1), at(g, "2", 1), 0), 0u);
  EXPECT_EQ(count_temporal_paths(g, at(g, "3", 1), at(g, "3", 1), 0), 0u);
  EXPECT_EQ(count_temporal_paths(g, at(g, "3", 3), at(g, "1", 1), 2), 0u);

  const oracle::RawGraph raw{3, 3, true, {{0, 1, 0}, {0, 2, 1}, {1, 2, 2}}};
  EXPECT_EQ(oracle::count_paths(raw, {0, 0}, {2, 2}, 3), 2u);
}

TEST(CountTemporalPaths, OverflowIsReported) {
  // Walks in an undirected complete graph on 20 nodes grow like 19^k.
  std::vector<EdgeRecord> records;
  for (int u = 0; u < 20; ++u)
    for (int v = u + 1; v < 20; ++v) records.push_back({std::to_string(u), std::to_string(v), 1});
  const EvolvingGraph g = build_graph(records, Directedness::Undirected);
  EXPECT_EQ(count_temporal_paths(g, {0, 0}, {0, 0}, 2), 19u);
  EXPECT_THROW(count_temporal_paths(g, {0, 0}, {1, 0}, 20), OverflowError);
}

TEST(NaivePathSum, ThreeSliceUndercounts) {
  const EvolvingGraph g = three_slice();
  const NodeId n1 = *g.node_of("1"), n3 = *g.node_of("3");
  const auto s3 = naive_path_sum(g, 2);
  ASSERT_TRUE(s3.has_value());
  EXPECT_EQ((*s3)(n1, n3), 1u);
  const auto s2 = naive_path_sum(g, 1);
  ASSERT_TRUE(s2.has_value());
  for (NodeId i = 0; i < 3; ++i)
    for (NodeId j = 0; j < 3; ++j) EXPECT_EQ((*s2)(i, j), 0u);
  EXPECT_FALSE(naive_path_sum(g, 0).has_value());
  EXPECT_THROW(naive_path_sum(g, 3), ShapeError);

  const NaiveSumReport report = naive_sum_report(g, 2);
  ASSERT_TRUE(report.defined);
  bool found = false;
  for (const NaiveSumRow& row : report.rows) {
    if (row.src != n1 || row.dst != n3) continue;
    found = true;
    EXPECT_EQ(row.naive, 1u);
    EXPECT_EQ(row.temporal, PathCount{2});
  }
  EXPECT_TRUE(found);
  EXPECT_FALSE(naive_sum_report(g, 0).defined);
}

TEST(NaivePathSum, SizeGuards) {
  std::vector<EdgeRecord> records;
  for (int t = 1; t <= 13; ++t) records.push_back({"a", "b", t});
  const EvolvingGraph g = build_graph(records, Directedness::Directed);
  EXPECT_TRUE(naive_path_sum(g, 11).has_value());
  EXPECT_THROW(naive_path_sum(g, 12), TooLargeError);
  const EvolvingGraph wide = random_graph({600, 2, 700, 3, Directedness::Directed});
  EXPECT_THROW(naive_path_sum(wide, 1), TooLargeError);
}

TEST(Nilpotency, ThreeSlice) {
  const EvolvingGraph g = three_slice();
  EXPECT_EQ(nilpotency_index(g), 4u);
  const oracle::RawGraph raw{3, 3, true, {{0, 1, 0}, {0, 2, 1}, {1, 2, 2}}};
  EXPECT_EQ(oracle::nilpotency_by_powers(raw), 4u);
}

TEST(Nilpotency, EmptyAndCyclic) {
  const EvolvingGraph empty =
      EvolvingGraph::from_indexed({}, 2, {1}, {{0, 0, 0}}, Directedness::Directed);
  EXPECT_EQ(empty.active_count(), 0u);
  EXPECT_EQ(nilpotency_index(empty), 1u);
  const std::vector<EdgeRecord> pair{{"a", "b", 1}};
  EXPECT_FALSE(nilpotency_index(build_graph(pair, Directedness::Undirected)).has_value());
  const std::vector<EdgeRecord> cycle{{"a", "b", 1}, {"b", "a", 1}};
  EXPECT_FALSE(nilpotency_index(build_graph(cycle, Directedness::Directed)).has_value());
}

TEST(Materialize, ThreeSliceGolden) {
  const DenseMatrix<std::uint8_t> a = materialize_block_adjacency(three_slice());
  const std::vector<std::vector<int>> want{{0, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0},
                                           {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1},
                                           {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0}};
  ASSERT_EQ(a.rows(), 6u);
  ASSERT_EQ(a.cols(), 6u);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(a(i, j), want[i][j]) << i << "," << j;
}

TEST(Materialize, TooLarge) {
  const EvolvingGraph g = random_graph({10000, 1, 20000, 5, Directedness::Directed});
  ASSERT_GT(g.active_count(), kDenseActiveLimit);
  EXPECT_THROW(materialize_block_adjacency(g), TooLargeError);
}

TEST(MatrixMarket, ThreeSlice) {
  std::ostringstream restricted;
  write_matrix_market(three_slice(), MatrixForm::Restricted, restricted);
  EXPECT_EQ(restricted.str(),
            "%%MatrixMarket matrix coordinate pattern general\n"
            "% A_n over active temporal nodes, ordered by (time, node)\n"
            "6 6 6\n1 2\n1 3\n2 5\n3 4\n4 6\n5 6\n");
  std::ostringstream full;
  write_matrix_market(three_slice(), MatrixForm::Full, full);
  // Slots are time * 3 + node with nodes 1, 2, 3 at 0, 1, 2.
  EXPECT_EQ(full.str(),
            "%%MatrixMarket matrix coordinate pattern general\n"
            "% M_n over all temporal nodes, ordered by (time, node)\n"
            "9 9 6\n1 2\n1 4\n2 8\n4 6\n6 9\n8 9\n");
}

class AlgebraProperty : public ::testing::TestWithParam<int> {};

TEST_P(AlgebraProperty, MatchesOracles) {
  std::mt19937_64 rng(5000 + GetParam());
  const oracle::RawGraph raw = oracle::random_raw(rng, 6, 4, 14);
  const EvolvingGraph g = oracle::build(raw);
  const auto active = oracle::active_nodes(raw);

  for (const TemporalNode root : active) {
    EXPECT_EQ(algebraic_bfs(g, root), bfs(g, root));
    EXPECT_LE(algebraic_bfs(g, root).iterations(), active.size() + 1);
    for (const TemporalNode dst : active)
      for (std::size_t hops = 0; hops <= 4; ++hops)
        ASSERT_EQ(count_temporal_paths(g, root, dst, hops), oracle::count_paths(raw, root, dst, hops))
            << hops;
  }

  for (TimeIndex upto = 1; upto < raw.times; ++upto) {
    const auto sum = naive_path_sum(g, upto);
    ASSERT_TRUE(sum.has_value());
    const auto want = oracle::naive_sum_by_subsets(raw, upto);
    for (NodeId i = 0; i < raw.nodes; ++i)
      for (NodeId j = 0; j < raw.nodes; ++j) EXPECT_EQ((*sum)(i, j), want[i][j]);
  }

  // Block upper triangularity: no edge of A_n points back in time.
  const DenseMatrix<std::uint8_t> a = materialize_block_adjacency(g);
  for (std::size_t i = 0; i < active.size(); ++i)
    for (std::size_t j = 0; j < active.size(); ++j) {
      EXPECT_EQ(a(i, j), oracle::expansion_matrix(raw)[i][j]);
      if (a(i, j)) EXPECT_LE(active[i].time, active[j].time);
    }

  std::uniform_int_distribution<PathCount> value(0, 9);
  for (int trial = 0; trial < 100; ++trial) {
    CountVector b(g.time_count(), g.node_count());
    for (PathCount& x : b.data()) x = value(rng);
    EXPECT_EQ(block_matvec(g, b), dense_reference_matvec(g, b));
  }
}

TEST_P(AlgebraProperty, DagSlicesAreNilpotent) {
  std::mt19937_64 rng(6000 + GetParam());
  const oracle::RawGraph raw = oracle::random_raw(rng, 7, 4, 16, true, true);
  const EvolvingGraph g = oracle::build(raw);
  const auto index = nilpotency_index(g);
  ASSERT_TRUE(index.has_value());
  EXPECT_EQ(index, oracle::nilpotency_by_powers(raw));
  EXPECT_LE(*index, g.active_count() + 1);
  for (const TemporalNode root : oracle::active_nodes(raw))
    EXPECT_LE(algebraic_bfs(g, root).iterations(), *index);
}

TEST_P(AlgebraProperty, NilpotencyAgreesOnAnyGraph) {
  std::mt19937_64 rng(7000 + GetParam());
  const oracle::RawGraph raw = oracle::random_raw(rng, 6, 4, 12);
  EXPECT_EQ(nilpotency_index(oracle::build(raw)), oracle::nilpotency_by_powers(raw));
}

INSTANTIATE_TEST_SUITE_P(RandomSmallGraphs, AlgebraProperty, ::testing::Range(0, 40));

}  // namespace
}  // namespace evg

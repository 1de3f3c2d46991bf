#include <gtest/gtest.h>

#include <vector>

#include "linkpred/oracle.hpp"
#include "random_graphs.hpp"

namespace linkpred {
namespace {

TEST(Oracle, EmptyGraph) {
  OracleResult r = oracle_score_all(Graph{}, ScoreSpec{}, {});
  EXPECT_TRUE(r.candidates.empty());
  EXPECT_TRUE(r.histogram.buckets.empty());
  EXPECT_EQ(r.aupr, 0.0);
}

TEST(Oracle, RefusesLargeGraphs) {
  Graph g = testing::preferential_attachment(600, 1, 0.5, 1);
  EXPECT_THROW(oracle_score_all(g, ScoreSpec{}, {}), std::length_error);
  EXPECT_NO_THROW(oracle_score_all(g, ScoreSpec{ScoreKind::kCommonNeighbors}, {}, 600));
}

TEST(Oracle, FourCycleEnumeratesTheUniverse) {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  std::vector<Edge> test{{0, 2}};
  OracleResult r = oracle_score_all(g, ScoreSpec{ScoreKind::kDeductive}, test);
  ASSERT_EQ(r.candidates.size(), 8u);
  for (const auto& c : r.candidates) {
    const bool two_hop = (c.edge.target + 4 - c.edge.source) % 4 == 2;
    EXPECT_EQ(c.score, two_hop ? 1.0 : 0.0);
    EXPECT_EQ(c.positive, (c.edge == Edge{0, 2}));
  }
  ASSERT_EQ(r.thresholds.size(), 2u);
  EXPECT_EQ(r.thresholds[0], (ThresholdCounts{1.0, 1, 3}));
  EXPECT_EQ(r.thresholds[1], (ThresholdCounts{0.0, 1, 7}));
  EXPECT_DOUBLE_EQ(r.aupr, 0.25);
}

TEST(Oracle, SumsAgreeWithUniverse) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = testing::erdos_renyi(25, 0.08, seed);
    OracleResult r = oracle_score_all(g, ScoreSpec{ScoreKind::kResourceAllocation}, {});
    EXPECT_EQ(r.candidates.size(), universe_stats(g).universe_size);
    EXPECT_NO_THROW(r.histogram.check_conservation());
  }
}

}  // namespace
}  // namespace linkpred

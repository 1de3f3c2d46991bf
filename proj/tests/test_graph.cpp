#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>
#include <vector>

#include "linkpred/graph.hpp"
#include "random_graphs.hpp"

namespace linkpred {
namespace {

Graph load(const std::string& text, IdFormat format = IdFormat::kInteger) {
  std::istringstream in(text);
  return load_edge_list(in, format).graph;
}

std::vector<VertexId> as_vector(std::span<const VertexId> s) { return {s.begin(), s.end()}; }

TEST(LoadEdgeList, TwoEdgeChain) {
  Graph g = load("1 2\n2 3\n");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(LoadEdgeList, DropsDuplicatesAndSelfLoops) {
  std::istringstream in("1 2\n1 2\n1 1\n");
  LoadedGraph loaded = load_edge_list(in);
  EXPECT_EQ(loaded.graph.edge_count(), 1u);
  EXPECT_EQ(loaded.stats.raw_edges, 3u);
  EXPECT_EQ(loaded.stats.duplicate_edges, 1u);
  EXPECT_EQ(loaded.stats.self_loops, 1u);
}

TEST(LoadEdgeList, CommentsBlankLinesAndTabs) {
  std::istringstream in("# Directed graph\n# FromNodeId\tToNodeId\n\n0\t1\r\n  1 2  \n");
  LoadedGraph loaded = load_edge_list(in);
  EXPECT_EQ(loaded.graph.edge_count(), 2u);
  EXPECT_EQ(loaded.stats.comment_lines, 2u);
}

TEST(LoadEdgeList, MalformedLinesReportLineNumber) {
  try {
    load("1 2\n# ok\n3 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    load("1 2 3\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  EXPECT_THROW(load("1\n"), ParseError);
  EXPECT_THROW(load("-1 2\n"), ParseError);
}

TEST(LoadEdgeList, EmptyInputIsAnError) {
  EXPECT_THROW(load(""), ParseError);
  EXPECT_THROW(load("# only a comment\n"), ParseError);
}

TEST(LoadEdgeList, IntegerIdsAreDenseInNumericOrder) {
  Graph g = load("100 7\n7 42\n");
  ASSERT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.label(0), "7");
  EXPECT_EQ(g.label(1), "42");
  EXPECT_EQ(g.label(2), "100");
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(LoadEdgeList, TokenIdsFollowFirstAppearance) {
  Graph g = load("home about\nabout team\nhome team\n", IdFormat::kToken);
  ASSERT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.label(0), "home");
  EXPECT_EQ(g.label(2), "team");
  EXPECT_EQ(g.edge_count(), 3u);
  LabelIndex index(g);
  EXPECT_EQ(index.at("about"), 1u);
  EXPECT_THROW(index.at("missing"), std::out_of_range);
}

TEST(Neighbors, DefinitionUnrolled) {
  // a=0, b=1, c=2 with a→b, c→a.
  Graph g = Graph::from_edges(3, {{0, 1}, {2, 0}});
  EXPECT_EQ(as_vector(g.neighbors_out(0)), (std::vector<VertexId>{1}));
  EXPECT_EQ(as_vector(g.neighbors_in(0)), (std::vector<VertexId>{2}));
  EXPECT_EQ(as_vector(g.neighbors_undirected(0)), (std::vector<VertexId>{1, 2}));
}

TEST(Neighbors, IsolatedVertexIsEmpty) {
  Graph g = Graph::from_edges(3, {{0, 1}});
  EXPECT_TRUE(g.neighbors_out(2).empty());
  EXPECT_TRUE(g.neighbors_in(2).empty());
  EXPECT_TRUE(g.neighbors_undirected(2).empty());
}

TEST(Neighbors, ReciprocalEdgesAppearOnceInUnion) {
  Graph g = Graph::from_edges(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(as_vector(g.neighbors_undirected(0)), (std::vector<VertexId>{1}));
}

TEST(Neighbors, OutOfRangeIsDomainError) {
  Graph g = Graph::from_edges(2, {{0, 1}});
  EXPECT_THROW(g.neighbors_out(2), std::out_of_range);
  EXPECT_THROW(g.neighbors_in(5), std::out_of_range);
  EXPECT_THROW(g.neighbors_undirected(2), std::out_of_range);
}

TEST(Graph, FromEdgesRejectsOutOfRangeEndpoints) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), std::out_of_range);
}

TEST(GraphProperties, UnionViewMirrorAndDegreeSums) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 5 + seed * 25;  // up to 980 vertices
    Graph g = seed % 2 == 0 ? testing::erdos_renyi(n, 3.0 / static_cast<double>(n), seed)
                            : testing::preferential_attachment(n, 3, 0.3, seed);
    std::size_t out_sum = 0, in_sum = 0;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      auto out = g.neighbors_out(x);
      auto in = g.neighbors_in(x);
      out_sum += out.size();
      in_sum += in.size();
      ASSERT_TRUE(std::is_sorted(out.begin(), out.end()));
      ASSERT_TRUE(std::adjacent_find(out.begin(), out.end()) == out.end());
      ASSERT_TRUE(std::find(out.begin(), out.end(), x) == out.end());

      std::set<VertexId> expected(out.begin(), out.end());
      expected.insert(in.begin(), in.end());
      ASSERT_EQ(as_vector(g.neighbors_undirected(x)),
                std::vector<VertexId>(expected.begin(), expected.end()));

      for (VertexId y : out) {
        auto back = g.neighbors_in(y);
        ASSERT_TRUE(std::binary_search(back.begin(), back.end(), x));
      }
      for (VertexId y : g.neighbors_undirected(x)) {
        auto back = g.neighbors_undirected(y);
        ASSERT_TRUE(std::binary_search(back.begin(), back.end(), x));
      }
    }
    EXPECT_EQ(out_sum, g.edge_count());
    EXPECT_EQ(in_sum, g.edge_count());
  }
}

TEST(GraphProperties, CanonicalEdgeListRoundTrips) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    // Relabel through a sparse id space so the external ids matter.
    Graph base = testing::preferential_attachment(50 + seed * 10, 2, 0.4, seed);
    std::ostringstream text;
    for (const Edge& e : base.edges()) text << e.source * 7 + 3 << ' ' << e.target * 7 + 3 << '\n';
    Graph loaded = load(text.str());

    std::ostringstream canonical;
    write_edge_list(canonical, loaded);
    Graph reloaded = load(canonical.str());
    EXPECT_EQ(loaded, reloaded);

    std::ostringstream again;
    write_edge_list(again, reloaded);
    EXPECT_EQ(canonical.str(), again.str());
  }
}

TEST(Graph, CopiesShareTheLazyUnionView) {
  Graph g = Graph::from_edges(3, {{0, 1}, {2, 0}});
  Graph copy = g;
  EXPECT_EQ(g.neighbors_undirected(0).size(), 2u);
  EXPECT_EQ(copy.neighbors_undirected(0).size(), 2u);
}

}  // namespace
}  // namespace linkpred

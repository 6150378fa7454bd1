#include <gtest/gtest.h>

#include <sstream>

#include "gre/error.hpp"
#include "gre/oracle/oracle.hpp"
#include "test_graphs.hpp"

namespace gre {
namespace {

TEST(OraclePageRank, ZeroIterationsKeepsInitialValues) {
  const DirectedGraph g(test::edges_of({{0, 1}, {1, 2}}));
  const auto r = oracle::serial_pagerank(g, 0, 0.85, 0.15, 1.0);
  EXPECT_EQ(r.values, (std::vector<double>{1.0, 1.0, 1.0}));
  EXPECT_EQ(r.ids, (std::vector<GlobalId>{0, 1, 2}));
  EXPECT_EQ(r.algorithm, "pagerank");
}

TEST(OraclePageRank, NoInEdgesGivesBase) {
  const DirectedGraph g(test::edges_of({{4, 6}}));
  const auto r = oracle::serial_pagerank(g, 1);
  EXPECT_DOUBLE_EQ(r.values[0], 0.15);
  EXPECT_DOUBLE_EQ(r.values[1], 1.0);
}

TEST(OraclePageRank, UsesGlobalOutDegree) {
  const DirectedGraph g(test::edges_of({{0, 1}, {0, 2}, {1, 2}}));
  const auto r = oracle::serial_pagerank(g, 1);
  EXPECT_DOUBLE_EQ(r.values[1], 0.15 + 0.85 * 0.5);
  EXPECT_DOUBLE_EQ(r.values[2], 0.15 + 0.85 * 1.5);
}

TEST(OracleDijkstra, ChainAndUnreachable) {
  const DirectedGraph g(test::weighted_edges_of({{0, 1, 2}, {1, 2, 3}, {7, 0, 1}}));
  const auto r = oracle::serial_dijkstra(g, 0);
  EXPECT_EQ(r.values, (std::vector<std::uint64_t>{0, 2, 5, oracle::kUnreachable}));
  EXPECT_THROW(oracle::serial_dijkstra(g, 99), ParameterError);
}

TEST(OracleDijkstra, PrefersCheaperLongerPath) {
  const DirectedGraph g(test::weighted_edges_of({{0, 3, 10}, {0, 1, 1}, {1, 2, 1}, {2, 3, 1}}));
  EXPECT_EQ(oracle::serial_dijkstra(g, 0).values[3], 3U);
}

TEST(OracleUnionFind, ComponentsLabelledByMinimumId) {
  EXPECT_EQ(oracle::serial_union_find_cc(DirectedGraph(test::edges_of({{3, 9}}))).values,
            (std::vector<GlobalId>{3, 3}));
  const auto r = oracle::serial_union_find_cc(
      DirectedGraph(test::edges_of({{2, 1}, {3, 2}, {1, 3}, {9, 8}, {8, 7}, {7, 9}})));
  EXPECT_EQ(r.values, (std::vector<GlobalId>{1, 1, 1, 7, 7, 7}));
  // Direction is ignored.
  const auto d = oracle::serial_union_find_cc(DirectedGraph(test::edges_of({{5, 2}, {5, 4}})));
  EXPECT_EQ(d.values, (std::vector<GlobalId>{2, 2, 2}));
}

TEST(OracleCsv, FormatsInfinityAndFullPrecision) {
  std::ostringstream ints;
  oracle::write_csv(ints, std::vector<GlobalId>{1, 2}, std::vector<std::uint64_t>{5, oracle::kUnreachable});
  EXPECT_EQ(ints.str(), "global_id,value\n1,5\n2,inf\n");
  std::ostringstream reals;
  oracle::write_csv(reals, std::vector<GlobalId>{3}, std::vector<double>{0.1});
  EXPECT_EQ(reals.str(), "global_id,value\n3,0.10000000000000001\n");
}

}  // namespace
}  // namespace gre

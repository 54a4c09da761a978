#include "hbfs/csr.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "oracles.hpp"

namespace hbfs {
namespace {

std::vector<offset_t> starts_of(const CsrGraph& g) {
  return {g.row_starts().begin(), g.row_starts().end()};
}
std::vector<vertex_t> adj_of(const CsrGraph& g) {
  return {g.adjacency().begin(), g.adjacency().end()};
}

TEST(CsrBuild, EmptyGraph) {
  const CsrGraph g = CsrGraph::build(4, std::vector<Edge>{});
  EXPECT_EQ(starts_of(g), (std::vector<offset_t>{0, 0, 0, 0, 0}));
  EXPECT_TRUE(adj_of(g).empty());
  EXPECT_EQ(g.num_arcs(), 0u);
}

TEST(CsrBuild, TwoEdgePath) {
  const CsrGraph g = CsrGraph::build(3, std::vector<Edge>{{0, 1}, {1, 2}});
  EXPECT_EQ(starts_of(g), (std::vector<offset_t>{0, 1, 3, 4}));
  EXPECT_EQ(adj_of(g), (std::vector<vertex_t>{1, 0, 2, 1}));
  EXPECT_EQ(g.in_edges_total(), 2u);
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(CsrBuild, SelfLoopYieldsTwoArcs) {
  const CsrGraph g = CsrGraph::build(2, std::vector<Edge>{{0, 0}});
  EXPECT_EQ(starts_of(g), (std::vector<offset_t>{0, 2, 2}));
  EXPECT_EQ(adj_of(g), (std::vector<vertex_t>{0, 0}));
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.degree(1), 0u);
}

TEST(CsrBuild, DegreeOutOfRangeThrows) {
  const CsrGraph g = CsrGraph::build(3, testing::path_edges(3));
  EXPECT_THROW(g.degree(3), std::out_of_range);
}

TEST(CsrBuild, EndpointOutOfRangeThrows) {
  EXPECT_THROW(CsrGraph::build(2, std::vector<Edge>{{0, 2}}), std::invalid_argument);
}

TEST(CsrBuild, StructuralInvariantsOnKronecker) {
  const EdgeList list = testing::kronecker(11, 16, 3);
  const CsrGraph g = CsrGraph::build(list);
  const auto rows = g.row_starts();
  ASSERT_EQ(rows.size(), g.num_vertices() + 1u);
  EXPECT_EQ(rows.front(), 0u);
  EXPECT_EQ(rows.back(), g.num_arcs());
  EXPECT_EQ(g.num_arcs(), 2 * g.in_edges_total());
  std::uint64_t degree_sum = 0;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    ASSERT_LE(rows[v], rows[v + 1]);
    const auto row = g.neighbors(v);
    ASSERT_TRUE(std::is_sorted(row.begin(), row.end()));
    for (vertex_t w : row) ASSERT_LT(w, g.num_vertices());
    degree_sum += g.degree(v);
  }
  EXPECT_EQ(degree_sum, g.num_arcs());

  // Symmetry as multiset equality of arcs and reversed arcs.
  std::map<std::pair<vertex_t, vertex_t>, long> balance;
  for (vertex_t u = 0; u < g.num_vertices(); ++u) {
    for (vertex_t w : g.neighbors(u)) {
      ++balance[{u, w}];
      --balance[{w, u}];
    }
  }
  for (const auto& [arc, count] : balance) ASSERT_EQ(count, 0);
}

TEST(CsrBuild, IndependentOfEdgeOrder) {
  auto edges = testing::random_edges(200, 1500, 11);
  const CsrGraph a = CsrGraph::build(200, edges);
  std::mt19937_64 rng(5);
  std::shuffle(edges.begin(), edges.end(), rng);
  for (auto& e : edges) std::swap(e.u, e.v);
  const CsrGraph b = CsrGraph::build(200, edges);
  EXPECT_EQ(starts_of(a), starts_of(b));
  EXPECT_EQ(adj_of(a), adj_of(b));
}

}  // namespace
}  // namespace hbfs

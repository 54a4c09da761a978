#include "hbfs/bfs_scalar.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "oracles.hpp"

namespace hbfs {
namespace {

using Kernel = std::function<LayerCounters(const CsrGraph&, const Bitmap&, Bitmap&, Bitmap&,
                                           BfsTree&, std::uint64_t)>;

struct LayerState {
  Bitmap in, vis, out;
  BfsTree tree;
  LayerState(std::uint64_t n, vertex_t source)
      : in(n), vis(n), out(n), tree(n, source) {}
};

std::vector<vertex_t> members(const Bitmap& b) {
  std::vector<vertex_t> r;
  for (vertex_t v = 0; v < b.size(); ++v)
    if (b.test(v)) r.push_back(v);
  return r;
}

struct Traversal {
  BfsTree tree;
  Bitmap visited;
  std::uint64_t summed_v_f = 0;
  std::vector<std::uint64_t> e_u;
};

Traversal run_layers(const CsrGraph& g, vertex_t source, const Kernel& kernel) {
  LayerState s(g.num_vertices(), source);
  s.in.set_atomic(source);
  s.vis.set_atomic(source);
  Traversal t;
  std::uint64_t e_u = g.num_arcs() - g.degree(source);
  while (s.in.popcount() != 0) {
    const LayerCounters c = kernel(g, s.in, s.vis, s.out, s.tree, e_u);
    EXPECT_EQ(c.v_f, s.out.popcount());
    EXPECT_LE(c.e_u, e_u);
    e_u = c.e_u;
    t.e_u.push_back(c.e_u);
    t.summed_v_f += c.v_f;
    s.in.swap(s.out);
    s.out.clear();
  }
  t.tree = std::move(s.tree);
  t.visited = std::move(s.vis);
  return t;
}

TEST(TopDownLayer, StarCenterReachesAllLeaves) {
  const CsrGraph g = CsrGraph::build(5, testing::star_edges(4));
  LayerState s(5, 0);
  s.in.set_atomic(0);
  s.vis.set_atomic(0);
  const LayerCounters c = top_down_layer(g, s.in, s.vis, s.out, s.tree, g.num_arcs() - 4);
  EXPECT_EQ(members(s.out), (std::vector<vertex_t>{1, 2, 3, 4}));
  for (vertex_t v = 1; v <= 4; ++v) EXPECT_EQ(s.tree.parent[v], 0u);
  EXPECT_EQ(c.v_f, 4u);
  EXPECT_EQ(c.e_f, 4u);
  EXPECT_EQ(c.e_u, 0u);
}

TEST(TopDownLayer, EmptyFrontierChangesNothing) {
  const CsrGraph g = CsrGraph::build(5, testing::star_edges(4));
  LayerState s(5, 0);
  s.vis.set_atomic(0);
  const LayerCounters c = top_down_layer(g, s.in, s.vis, s.out, s.tree, 8);
  EXPECT_EQ(s.out.popcount(), 0u);
  EXPECT_EQ(s.vis.popcount(), 1u);
  EXPECT_EQ(c.v_f, 0u);
  EXPECT_EQ(c.e_u, 8u);
}

TEST(TopDownLayer, IsolatedFrontierVertex) {
  const CsrGraph g = CsrGraph::build(3, std::vector<Edge>{{1, 2}});
  LayerState s(3, 0);
  s.in.set_atomic(0);
  s.vis.set_atomic(0);
  top_down_layer(g, s.in, s.vis, s.out, s.tree);
  EXPECT_EQ(s.out.popcount(), 0u);
}

TEST(BottomUpLayer, PathFindsOnlyNextVertex) {
  const CsrGraph g = CsrGraph::build(3, testing::path_edges(3));
  LayerState s(3, 0);
  s.in.set_atomic(0);
  s.vis.set_atomic(0);
  const LayerCounters c = bottom_up_layer(g, s.in, s.vis, s.out, s.tree, 3);
  EXPECT_EQ(members(s.out), (std::vector<vertex_t>{1}));
  EXPECT_EQ(s.tree.parent[1], 0u);
  EXPECT_EQ(s.tree.parent[2], kNil);
  EXPECT_FALSE(s.vis.test(2));
  EXPECT_EQ(c.v_f, 1u);
  EXPECT_EQ(c.e_f, 2u);
  EXPECT_EQ(c.e_u, 1u);
}

TEST(BottomUpLayer, AllVisitedYieldsNothing) {
  const CsrGraph g = CsrGraph::build(3, testing::triangle_edges());
  LayerState s(3, 0);
  for (vertex_t v = 0; v < 3; ++v) {
    s.in.set_atomic(v);
    s.vis.set_atomic(v);
  }
  bottom_up_layer(g, s.in, s.vis, s.out, s.tree);
  EXPECT_EQ(s.out.popcount(), 0u);
}

TEST(BottomUpLayer, TriangleBothFindSource) {
  const CsrGraph g = CsrGraph::build(3, testing::triangle_edges());
  LayerState s(3, 0);
  s.in.set_atomic(0);
  s.vis.set_atomic(0);
  bottom_up_layer(g, s.in, s.vis, s.out, s.tree);
  EXPECT_EQ(members(s.out), (std::vector<vertex_t>{1, 2}));
  EXPECT_EQ(s.tree.parent[1], 0u);
  EXPECT_EQ(s.tree.parent[2], 0u);
}

TEST(BottomUpLayer, PicksFirstFrontierNeighbourInRowOrder) {
  // Vertex 5 is adjacent to 1, 2, 3; only 2 and 3 are in the frontier.
  const CsrGraph g = CsrGraph::build(6, std::vector<Edge>{{5, 3}, {5, 1}, {5, 2}});
  LayerState s(6, 0);
  for (vertex_t v : {0u, 2u, 3u}) {
    s.in.set_atomic(v);
    s.vis.set_atomic(v);
  }
  bottom_up_layer(g, s.in, s.vis, s.out, s.tree);
  EXPECT_EQ(s.tree.parent[5], 2u);
}

TEST(BfsReference, PathLevels) {
  const CsrGraph g = CsrGraph::build(3, testing::path_edges(3));
  const ReferenceBfs r = bfs_reference(g, 0);
  EXPECT_EQ(r.levels, (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_EQ(r.tree.parent, (std::vector<vertex_t>{0, 0, 1}));
}

TEST(BfsReference, IsolatedSource) {
  const CsrGraph g = CsrGraph::build(4, std::vector<Edge>{{1, 2}});
  const ReferenceBfs r = bfs_reference(g, 0);
  EXPECT_EQ(r.levels, (std::vector<std::uint32_t>{0, kUnreached, kUnreached, kUnreached}));
}

TEST(BfsReference, BadSourceThrows) {
  const CsrGraph g = CsrGraph::build(3, testing::path_edges(3));
  EXPECT_THROW(bfs_reference(g, 3), std::out_of_range);
}

TEST(BfsReference, MatchesQueueOracleOnKronecker) {
  const EdgeList list = testing::kronecker(10, 16, 7);
  const CsrGraph g = CsrGraph::build(list);
  for (vertex_t s = 0; s < g.num_vertices(); ++s) {
    const auto expected = testing::oracle_levels(list.num_vertices, list.edges, s);
    const ReferenceBfs r = bfs_reference(g, s);
    ASSERT_EQ(r.levels, expected) << "source " << s;
    ASSERT_EQ(tree_levels(r.tree), expected) << "source " << s;
  }
}

TEST(TreeLevels, CycleAndDanglingChainsAreUnreached) {
  BfsTree t(6, 0);
  t.parent[1] = 0;
  t.parent[2] = 3;  // 2 <-> 3 cycle
  t.parent[3] = 2;
  t.parent[4] = 2;  // hangs off the cycle
  t.parent[5] = kNil;
  EXPECT_EQ(tree_levels(t),
            (std::vector<std::uint32_t>{0, 1, kUnreached, kUnreached, kUnreached, kUnreached}));
}

class DirectionEquivalence : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(DirectionEquivalence, AllTopDownMatchesAllBottomUp) {
  const EdgeList list = testing::kronecker(GetParam(), 8, 21);
  const CsrGraph g = CsrGraph::build(list);
  for (vertex_t s = 0; s < g.num_vertices(); s += 7) {
    const Traversal td = run_layers(g, s, top_down_layer);
    const Traversal bu = run_layers(g, s, bottom_up_layer);
    const ReferenceBfs ref = bfs_reference(g, s);
    ASSERT_EQ(td.visited, bu.visited);
    ASSERT_EQ(tree_levels(td.tree), ref.levels);
    ASSERT_EQ(tree_levels(bu.tree), ref.levels);

    const auto reached = static_cast<std::uint64_t>(
        std::count_if(ref.levels.begin(), ref.levels.end(),
                      [](std::uint32_t l) { return l != kUnreached; }));
    EXPECT_EQ(td.summed_v_f, reached - 1);
    EXPECT_EQ(bu.summed_v_f, reached - 1);
    EXPECT_TRUE(std::is_sorted(td.e_u.rbegin(), td.e_u.rend()));

    // Parent validity against level soundness.
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
      if (v == s || ref.levels[v] == kUnreached) continue;
      ASSERT_EQ(ref.levels[td.tree.parent[v]] + 1, ref.levels[v]);
      ASSERT_EQ(ref.levels[bu.tree.parent[v]] + 1, ref.levels[v]);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Scales, DirectionEquivalence, ::testing::Values(4u, 7u, 10u));

}  // namespace
}  // namespace hbfs

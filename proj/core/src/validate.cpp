#include <algorithm>
#include <string>

#include "hbfs/bfs_scalar.hpp"
#include "hbfs/harness.hpp"

namespace hbfs {

namespace {

ValidationResult fail(int rule, vertex_t v, vertex_t other, std::string message) {
  return {Violation{rule, v, other, std::move(message)}};
}

bool has_arc(const CsrGraph& g, vertex_t from, vertex_t to) {
  const auto row = g.neighbors(from);
  return std::binary_search(row.begin(), row.end(), to);
}

}  // namespace

ValidationResult validate_tree(const CsrGraph& g, vertex_t source, const BfsTree& tree) {
  const vertex_t n = g.num_vertices();
  if (source >= n || tree.parent.size() != n) {
    return fail(1, source, kNil, "source out of range or parent array has the wrong size");
  }
  const auto& parent = tree.parent;

  // 1. The source is its own parent.
  if (parent[source] != source) {
    return fail(1, source, kNil, "parent[source] != source");
  }

  // 2. Tree edges are graph edges.
  for (vertex_t v = 0; v < n; ++v) {
    const vertex_t p = parent[v];
    if (v == source || p == kNil) continue;
    if (p >= n || !has_arc(g, p, v)) {
      return fail(2, v, p, "parent[" + std::to_string(v) + "] = " + std::to_string(p) +
                               " is not a neighbour");
    }
  }

  // 5. Visited exactly the reachable set.
  const auto reachable = bfs_reference(g, source).levels;
  for (vertex_t v = 0; v < n; ++v) {
    const bool visited = parent[v] != kNil;
    const bool reached = reachable[v] != kUnreached;
    if (visited != reached) {
      return fail(5, v, kNil,
                  "vertex " + std::to_string(v) +
                      (visited ? " is visited but unreachable" : " is reachable but unvisited"));
    }
  }

  // 3. Parent chains terminate at the source and levels step by one.
  const auto levels = tree_levels(tree);
  for (vertex_t v = 0; v < n; ++v) {
    if (parent[v] == kNil) continue;
    if (levels[v] == kUnreached) {
      return fail(3, v, parent[v],
                  "parent chain from " + std::to_string(v) + " does not reach the source");
    }
    if (v != source && levels[v] != levels[parent[v]] + 1) {
      return fail(3, v, parent[v], "level of " + std::to_string(v) + " is not parent level + 1");
    }
  }

  // 4. No graph edge between visited vertices skips a level.
  const auto rows = g.row_starts();
  const auto adj = g.adjacency();
  for (vertex_t u = 0; u < n; ++u) {
    if (levels[u] == kUnreached) continue;
    for (offset_t k = rows[u]; k < rows[u + 1]; ++k) {
      const vertex_t w = adj[k];
      if (levels[w] == kUnreached) continue;
      const auto gap = levels[u] > levels[w] ? levels[u] - levels[w] : levels[w] - levels[u];
      if (gap > 1) {
        return fail(4, u, w, "edge (" + std::to_string(u) + ", " + std::to_string(w) +
                                 ") spans " + std::to_string(gap) + " levels");
      }
    }
  }
  return {};
}

}  // namespace hbfs

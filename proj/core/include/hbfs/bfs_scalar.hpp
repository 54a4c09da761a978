#pragma once

#include <cstdint>
#include <vector>

#include "hbfs/csr.hpp"
#include "hbfs/frontier.hpp"

namespace hbfs {

// Layer kernels share one contract:
//   pre:  in is a subset of vis; out is all zero.
//   post: newly reached vertices are set in vis and out and get a parent in
//         `in`.  The returned counters describe the vertices added to out;
//         e_u = unvisited_edges - e_f.

/// Top-down step: each frontier vertex claims its unvisited neighbours.
/// Claims go through an atomic test-and-set, so exactly one writer sets
/// parent[v].
LayerCounters top_down_layer(const CsrGraph& g, const Bitmap& in, Bitmap& vis,
                             Bitmap& out, BfsTree& tree,
                             std::uint64_t unvisited_edges = 0);

/// Bottom-up step: every unvisited vertex adopts the first neighbour, in row
/// order, that is in the frontier.
LayerCounters bottom_up_layer(const CsrGraph& g, const Bitmap& in, Bitmap& vis,
                              Bitmap& out, BfsTree& tree,
                              std::uint64_t unvisited_edges = 0);

struct ReferenceBfs {
  BfsTree tree;
  std::vector<std::uint32_t> levels;  // kUnreached for unreached vertices
};

/// Sequential queue-based BFS.  Throws std::out_of_range for a bad source.
ReferenceBfs bfs_reference(const CsrGraph& g, vertex_t source);

/// Levels obtained by walking parent pointers back to the source.  Vertices
/// that are unvisited, or whose chain never reaches the source, get
/// kUnreached.
std::vector<std::uint32_t> tree_levels(const BfsTree& tree);

}  // namespace hbfs

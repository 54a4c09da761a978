#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hbfs/generator.hpp"
#include "hbfs/types.hpp"

namespace hbfs {

/// Compressed sparse row adjacency.  Every undirected input edge (u, v) is
/// stored as the two arcs u->v and v->u; rows are sorted ascending.
/// Duplicate edges and self-loops are kept.
class CsrGraph {
 public:
  CsrGraph() = default;

  static CsrGraph build(const EdgeList& list);
  static CsrGraph build(std::uint64_t num_vertices, std::span<const Edge> edges);

  vertex_t num_vertices() const { return num_vertices_; }
  std::uint64_t num_arcs() const { return adjacency_.size(); }
  // Undirected input edge count; the TEPS numerator.
  std::uint64_t in_edges_total() const { return in_edges_total_; }

  std::span<const offset_t> row_starts() const { return row_starts_; }
  std::span<const vertex_t> adjacency() const { return adjacency_; }

  /// Throws std::out_of_range for v >= num_vertices().
  std::uint64_t degree(vertex_t v) const;

  std::span<const vertex_t> neighbors(vertex_t v) const {
    return {adjacency_.data() + row_starts_[v],
            adjacency_.data() + row_starts_[v + 1]};
  }

 private:
  vertex_t num_vertices_ = 0;
  std::uint64_t in_edges_total_ = 0;
  std::vector<offset_t> row_starts_{0};
  std::vector<vertex_t> adjacency_;
};

}  // namespace hbfs

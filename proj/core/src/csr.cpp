#include "hbfs/csr.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace hbfs {

CsrGraph CsrGraph::build(const EdgeList& list) {
  return build(list.num_vertices, list.edges);
}

CsrGraph CsrGraph::build(std::uint64_t num_vertices, std::span<const Edge> edges) {
  if (num_vertices > (std::uint64_t{1} << kMaxScale)) {
    throw CapacityError("vertex count " + std::to_string(num_vertices) +
                        " does not fit 32-bit vertex ids");
  }
  if (edges.size() > std::numeric_limits<offset_t>::max() / 2) {
    throw CapacityError("arc count overflows the offset type");
  }

  CsrGraph g;
  g.num_vertices_ = static_cast<vertex_t>(num_vertices);
  g.in_edges_total_ = edges.size();

  std::vector<offset_t> starts(num_vertices + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= num_vertices || e.v >= num_vertices) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    ++starts[e.u + 1];
    ++starts[e.v + 1];
  }
  for (std::uint64_t v = 0; v < num_vertices; ++v) starts[v + 1] += starts[v];

  std::vector<vertex_t> adjacency(starts[num_vertices]);
  std::vector<offset_t> cursor(starts.begin(), starts.end() - 1);
  for (const Edge& e : edges) {
    adjacency[cursor[e.u]++] = e.v;
    adjacency[cursor[e.v]++] = e.u;
  }

  const auto n = static_cast<std::int64_t>(num_vertices);
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t v = 0; v < n; ++v) {
    std::sort(adjacency.begin() + static_cast<std::ptrdiff_t>(starts[v]),
              adjacency.begin() + static_cast<std::ptrdiff_t>(starts[v + 1]));
  }

  g.row_starts_ = std::move(starts);
  g.adjacency_ = std::move(adjacency);
  return g;
}

std::uint64_t CsrGraph::degree(vertex_t v) const {
  if (v >= num_vertices_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  return row_starts_[v + 1] - row_starts_[v];
}

}  // namespace hbfs

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hbfs/types.hpp"

namespace hbfs {

/// Parameters of a Kronecker (R-MAT) graph.  Vertex count is 2^scale and the
/// generator emits 2^scale * edgefactor undirected edges.
struct GraphParams {
  std::uint32_t scale = 10;
  std::uint32_t edgefactor = 16;
  std::uint64_t seed = 1;
  // Quadrant probabilities (a, b, c, d); the Graph500 initiator by default.
  std::array<double, 4> probs{0.57, 0.19, 0.19, 0.05};
  // Relabel vertices with a seeded permutation after generation.
  bool permute_vertices = true;
  // Upper bound on the in-memory edge list size, in bytes.
  std::uint64_t memory_budget_bytes = std::uint64_t{16} << 30;

  /// Throws std::invalid_argument when the probabilities do not sum to one,
  /// are negative, or scale/edgefactor are out of range.
  void validate() const;

  std::uint64_t num_vertices() const { return std::uint64_t{1} << scale; }
  std::uint64_t num_edges() const { return num_vertices() * edgefactor; }
};

struct Edge {
  vertex_t u;
  vertex_t v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgeList {
  std::vector<Edge> edges;
  std::uint64_t num_vertices = 0;
  GraphParams params;
};

/// SplitMix64.  Every edge gets its own substream, so the output does not
/// depend on the order in which edges are produced.
class EdgeRng {
 public:
  explicit EdgeRng(std::uint64_t state) : state_(state) {}

  static EdgeRng for_edge(std::uint64_t seed, std::uint64_t edge_index);
  static EdgeRng for_stream(std::uint64_t seed, std::uint64_t stream_tag);

  std::uint64_t next_u64();
  // Uniform in [0, 1) with 53 bits of precision.
  double next_unit();
  // Uniform in [0, bound), bound > 0, without modulo bias.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t x);

/// One R-MAT edge: `scale` recursive quadrant choices, most significant bit
/// first.  No vertex permutation is applied.
std::pair<vertex_t, vertex_t> rmat_edge(const GraphParams& params, EdgeRng& rng);

/// Seeded permutation of [0, n).
std::vector<vertex_t> vertex_permutation(std::uint64_t n, std::uint64_t seed);

/// Deterministic, parallel-safe edge list generation.  Throws CapacityError
/// if the edge list would exceed params.memory_budget_bytes.
EdgeList generate(const GraphParams& params);

// Binary dump format (little-endian):
//   "HBFSEDG1", scale:u32, edgefactor:u32, seed:u64, count:u64,
//   then `count` pairs of u64 endpoints.
void write_edge_list(std::ostream& os, const EdgeList& list);
EdgeList read_edge_list(std::istream& is);

}  // namespace hbfs

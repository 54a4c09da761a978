#pragma once

#include <cstdint>

#include "hbfs/csr.hpp"
#include "hbfs/frontier.hpp"
#include "hbfs/lanes.hpp"

namespace hbfs {

struct VecConfig {
  // Adjacency positions probed with vector gathers before a vertex is handed
  // to the scalar search.
  std::uint32_t max_pos = 8;
  simd::Backend backend = simd::Backend::hardware_simd;

  void validate() const;  // max_pos >= 1
};

struct AdjacentLanes {
  simd::LaneVector neighbors;  // 0 on inactive lanes
  simd::LaneMask active;
};

/// Gathers adjacency[row_starts[v] + pos] for every lane whose vertex is
/// below num_vertices, unvisited (mask_vis bit 0), unresolved (mask_done bit
/// 0) and whose row is longer than pos.
AdjacentLanes load_adj(simd::Backend backend, const CsrGraph& g,
                       const simd::LaneVector& vertices, std::uint32_t pos,
                       simd::LaneMask mask_done, std::uint16_t mask_vis);

struct ProbeResult {
  simd::LaneMask active;  // lanes that had a neighbour at `pos`
  simd::LaneMask found;   // lanes whose neighbour is in the frontier
};

/// One vector probe at adjacency position `pos` for the 16 vertices of
/// (word_index, half).  Lanes whose neighbour is in `in` get that neighbour
/// as parent, are OR-ed into vis and out, and are added to mask_done.
ProbeResult looking_parents(simd::Backend backend, const CsrGraph& g,
                            const Bitmap& in, Bitmap& vis, Bitmap& out,
                            BfsTree& tree, const simd::LaneVector& vertices,
                            std::uint32_t pos, std::size_t word_index,
                            unsigned half, std::uint16_t mask_vis,
                            simd::LaneMask& mask_done);

/// Vectorized bottom-up layer.  Produces the same vis/out as
/// bottom_up_layer; vertices still unresolved after cfg.max_pos probes are
/// finished by a scalar search starting at position max_pos.  `fallbacks`
/// counts those vertices (only those with adjacency left to search).
LayerCounters bottom_up_multiple_set(const CsrGraph& g, const Bitmap& in,
                                     Bitmap& vis, Bitmap& out, BfsTree& tree,
                                     const VecConfig& cfg,
                                     std::uint64_t unvisited_edges = 0);

/// Vectorized top-down layer: each frontier row is processed 16 entries at a
/// time, the last chunk under a tail mask.
LayerCounters top_down_chunked(const CsrGraph& g, const Bitmap& in, Bitmap& vis,
                               Bitmap& out, BfsTree& tree, const VecConfig& cfg,
                               std::uint64_t unvisited_edges = 0);

}  // namespace hbfs

#pragma once

// AVX-512 implementations behind the portable lane contract.  Only called
// when hbfs::simd::hardware_simd_available() is true.

#include <cstdint>
#include <span>

#include "hbfs/bfs_vector.hpp"
#include "hbfs/lanes.hpp"

namespace hbfs::simd::avx512 {

bool compiled_in();
bool cpu_supported();

LaneVector masked_gather(std::span<const std::uint32_t> base, const LaneVector& idx,
                         LaneMask m, std::uint32_t fill);
void masked_scatter(std::span<std::uint32_t> base, const LaneVector& idx,
                    const LaneVector& vals, LaneMask m);

AdjacentLanes load_adj(const CsrGraph& g, const LaneVector& vertices, std::uint32_t pos,
                       LaneMask mask_done, std::uint16_t mask_vis);

ProbeResult looking_parents(const CsrGraph& g, const Bitmap& in, Bitmap& vis, Bitmap& out,
                            BfsTree& tree, const LaneVector& vertices, std::uint32_t pos,
                            std::size_t word_index, unsigned half, std::uint16_t mask_vis,
                            LaneMask& mask_done);

LayerCounters bottom_up_multiple_set(const CsrGraph& g, const Bitmap& in, Bitmap& vis,
                                     Bitmap& out, BfsTree& tree, std::uint32_t max_pos,
                                     std::uint64_t unvisited_edges);

LayerCounters top_down_chunked(const CsrGraph& g, const Bitmap& in, Bitmap& vis, Bitmap& out,
                               BfsTree& tree, std::uint64_t unvisited_edges);

}  // namespace hbfs::simd::avx512

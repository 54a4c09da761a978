#include "hbfs/bfs_vector.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "avx512_backend.hpp"
#include "bitops.hpp"

namespace hbfs {

using simd::Backend;
using simd::kLanes;
using simd::LaneMask;
using simd::LaneVector;

void VecConfig::validate() const {
  if (max_pos < 1) throw std::invalid_argument("max_pos must be >= 1");
}

namespace {

bool use_hardware(Backend b) { return simd::effective_backend(b) == Backend::hardware_simd; }

LaneVector shift_right(const LaneVector& v, unsigned s) {
  LaneVector r;
  for (int i = 0; i < kLanes; ++i) r.set(i, v[i] >> s);
  return r;
}

// Lanes of `active` whose neighbour has its bit set in `bits`.
LaneMask bits_set(const Bitmap& bits, const LaneVector& neighbors, LaneMask active) {
  const LaneVector words = simd::masked_gather(Backend::scalar_emulation, bits.words(),
                                               shift_right(neighbors, 5), active, 0);
  std::uint16_t hit = 0;
  for (int i = 0; i < kLanes; ++i) {
    if (active.test(i) && ((words[i] >> (neighbors[i] & 0x1F)) & 1u)) {
      hit |= static_cast<std::uint16_t>(1u << i);
    }
  }
  return LaneMask(hit);
}

LayerCounters bottom_up_emulated(const CsrGraph& g, const Bitmap& in, Bitmap& vis,
                                 Bitmap& out, BfsTree& tree, std::uint32_t max_pos,
                                 std::uint64_t unvisited_edges) {
  const auto rows = g.row_starts();
  const auto adj = g.adjacency();
  const std::uint64_t n = g.num_vertices();
  const auto words = static_cast<std::int64_t>(vis.word_count());
  std::uint64_t v_f = 0, e_f = 0, fallbacks = 0, gathers = 0;

#pragma omp parallel for schedule(dynamic, 64) reduction(+ : v_f, e_f, fallbacks, gathers)
  for (std::int64_t w = 0; w < words; ++w) {
    const auto wi = static_cast<std::size_t>(w);
    const std::uint32_t valid_word = detail::valid_bits(n, wi);
    if ((vis.word(wi) & valid_word) == valid_word) continue;

    for (unsigned half = 0; half < 2; ++half) {
      const std::uint64_t first = std::uint64_t{wi} * 32 + half * 16;
      if (first >= n) break;
      const LaneMask valid(static_cast<std::uint16_t>(valid_word >> (half * 16)));
      const auto snapshot = [&] {
        return static_cast<std::uint16_t>(vis.get_half(wi, half) | (~valid).bits());
      };
      std::uint16_t mask_vis = snapshot();
      if (mask_vis == 0xFFFF) continue;

      const LaneVector vertices = simd::load_vertices(wi, half);
      LaneMask done;
      for (std::uint32_t pos = 0; pos < max_pos; ++pos) {
        if ((~LaneMask(mask_vis) & ~done).none_set()) break;
        const ProbeResult probe = looking_parents(Backend::scalar_emulation, g, in, vis, out,
                                                  tree, vertices, pos, wi, half, mask_vis, done);
        if (probe.active.any()) gathers += 2;
        for (int i = 0; i < kLanes; ++i) {
          if (!probe.found.test(i)) continue;
          ++v_f;
          e_f += rows[vertices[i] + 1] - rows[vertices[i]];
        }
        mask_vis = snapshot();
        if (probe.active.none_set()) break;
      }

      const LaneMask pending = ~LaneMask(mask_vis) & ~done;
      for (int i = 0; i < kLanes; ++i) {
        if (!pending.test(i)) continue;
        const vertex_t v = vertices[i];
        const offset_t begin = rows[v] + max_pos;
        const offset_t end = rows[v + 1];
        if (begin >= end) continue;
        ++fallbacks;
        for (offset_t k = begin; k < end; ++k) {
          if (detail::has_bit(in, adj[k])) {
            tree.parent[v] = adj[k];
            vis.set_atomic(v);
            out.set_atomic(v);
            ++v_f;
            e_f += end - rows[v];
            break;
          }
        }
      }
    }
  }
  return {e_f, v_f, detail::saturating_sub(unvisited_edges, e_f), fallbacks, gathers};
}

LayerCounters top_down_emulated(const CsrGraph& g, const Bitmap& in, Bitmap& vis, Bitmap& out,
                                BfsTree& tree, std::uint64_t unvisited_edges) {
  const auto rows = g.row_starts();
  const auto adj = g.adjacency();
  const auto words = static_cast<std::int64_t>(in.word_count());
  std::uint64_t v_f = 0, e_f = 0, gathers = 0;

#pragma omp parallel for schedule(dynamic, 64) reduction(+ : v_f, e_f, gathers)
  for (std::int64_t w = 0; w < words; ++w) {
    std::uint32_t frontier = in.word(static_cast<std::size_t>(w));
    while (frontier != 0) {
      const auto u = static_cast<vertex_t>(w * 32 + std::countr_zero(frontier));
      frontier &= frontier - 1;
      const offset_t end = rows[u + 1];
      for (offset_t c = rows[u]; c < end; c += kLanes) {
        const auto len = static_cast<unsigned>(std::min<std::uint64_t>(end - c, kLanes));
        const LaneMask tail = LaneMask::first(len);
        const LaneVector nbrs = simd::masked_gather(Backend::scalar_emulation,
                                                    adj.subspan(c, len), LaneVector::iota(0),
                                                    tail, 0);
        const LaneMask unvisited = tail & ~bits_set(vis, nbrs, tail);
        ++gathers;
        if (unvisited.none_set()) continue;

        LaneMask claimed;
        for (int i = 0; i < kLanes; ++i) {
          if (!unvisited.test(i)) continue;
          const vertex_t v = nbrs[i];
          if (!detail::claim_bit(vis, v)) continue;
          claimed |= LaneMask(static_cast<std::uint16_t>(1u << i));
          out.set_atomic(v);
          ++v_f;
          e_f += rows[v + 1] - rows[v];
        }
        simd::masked_scatter(Backend::scalar_emulation, tree.parent, nbrs,
                             LaneVector::broadcast(u), claimed);
      }
    }
  }
  return {e_f, v_f, detail::saturating_sub(unvisited_edges, e_f), 0, gathers};
}

}  // namespace

AdjacentLanes load_adj(Backend backend, const CsrGraph& g, const LaneVector& vertices,
                       std::uint32_t pos, LaneMask mask_done, std::uint16_t mask_vis) {
  if (use_hardware(backend)) {
    return simd::avx512::load_adj(g, vertices, pos, mask_done, mask_vis);
  }
  const auto rows = g.row_starts();
  const auto adj = g.adjacency();
  const LaneMask cand = ~LaneMask(mask_vis) & ~mask_done;
  AdjacentLanes r;
  std::uint16_t active = 0;
  for (int i = 0; i < kLanes; ++i) {
    const vertex_t v = vertices[i];
    if (!cand.test(i) || v >= g.num_vertices()) continue;
    const offset_t at = rows[v] + pos;
    if (at >= rows[v + 1]) continue;
    r.neighbors.set(i, adj[at]);
    active |= static_cast<std::uint16_t>(1u << i);
  }
  r.active = LaneMask(active);
  return r;
}

ProbeResult looking_parents(Backend backend, const CsrGraph& g, const Bitmap& in, Bitmap& vis,
                            Bitmap& out, BfsTree& tree, const LaneVector& vertices,
                            std::uint32_t pos, std::size_t word_index, unsigned half,
                            std::uint16_t mask_vis, LaneMask& mask_done) {
  if (use_hardware(backend)) {
    return simd::avx512::looking_parents(g, in, vis, out, tree, vertices, pos, word_index,
                                         half, mask_vis, mask_done);
  }
  const AdjacentLanes a = load_adj(backend, g, vertices, pos, mask_done, mask_vis);
  const LaneMask found = bits_set(in, a.neighbors, a.active);
  if (found.any()) {
    simd::masked_scatter(backend, tree.parent, vertices, a.neighbors, found);
    vis.or_half(word_index, half, found.bits());
    out.or_half(word_index, half, found.bits());
    mask_done |= found;
  }
  return {a.active, found};
}

LayerCounters bottom_up_multiple_set(const CsrGraph& g, const Bitmap& in, Bitmap& vis,
                                     Bitmap& out, BfsTree& tree, const VecConfig& cfg,
                                     std::uint64_t unvisited_edges) {
  cfg.validate();
  if (use_hardware(cfg.backend)) {
    return simd::avx512::bottom_up_multiple_set(g, in, vis, out, tree, cfg.max_pos,
                                                unvisited_edges);
  }
  return bottom_up_emulated(g, in, vis, out, tree, cfg.max_pos, unvisited_edges);
}

LayerCounters top_down_chunked(const CsrGraph& g, const Bitmap& in, Bitmap& vis, Bitmap& out,
                               BfsTree& tree, const VecConfig& cfg,
                               std::uint64_t unvisited_edges) {
  cfg.validate();
  if (use_hardware(cfg.backend)) {
    return simd::avx512::top_down_chunked(g, in, vis, out, tree, unvisited_edges);
  }
  return top_down_emulated(g, in, vis, out, tree, unvisited_edges);
}

}  // namespace hbfs

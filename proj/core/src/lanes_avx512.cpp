#include "avx512_backend.hpp"

#include <stdexcept>

#if defined(HBFS_HAVE_AVX512)

#include <immintrin.h>

#include <array>
#include <bit>
#include <cassert>
#include <type_traits>

#include "bitops.hpp"

#define HBFS_AVX512 __attribute__((target("avx512f")))

namespace hbfs::simd::avx512 {

namespace {

// 64-bit row bounds of 16 vertices, split into lanes 0-7 and 8-15.
struct RowRanges {
  __m512i start_lo, start_hi, end_lo, end_hi;
};

HBFS_AVX512 inline __m512i to_m512(const LaneVector& v) {
  std::array<std::uint32_t, kLanes> tmp;
  v.store(tmp);
  return _mm512_loadu_si512(tmp.data());
}

HBFS_AVX512 inline LaneVector from_m512(__m512i v) {
  std::array<std::uint32_t, kLanes> tmp;
  _mm512_storeu_si512(tmp.data(), v);
  return LaneVector::load(tmp);
}

HBFS_AVX512 inline __m512i lane_iota() {
  return _mm512_set_epi32(15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0);
}

// Row bounds for arbitrary vertices (gathered).
HBFS_AVX512 inline RowRanges gather_ranges(const offset_t* rows, __m512i vertices,
                                           __mmask16 m) {
  const __m256i idx_lo = _mm512_castsi512_si256(vertices);
  const __m256i idx_hi = _mm512_extracti64x4_epi64(vertices, 1);
  const auto m_lo = static_cast<__mmask8>(m);
  const auto m_hi = static_cast<__mmask8>(m >> 8);
  const __m512i zero = _mm512_setzero_si512();
  return {_mm512_mask_i32gather_epi64(zero, m_lo, idx_lo, rows, 8),
          _mm512_mask_i32gather_epi64(zero, m_hi, idx_hi, rows, 8),
          _mm512_mask_i32gather_epi64(zero, m_lo, idx_lo, rows + 1, 8),
          _mm512_mask_i32gather_epi64(zero, m_hi, idx_hi, rows + 1, 8)};
}

// Row bounds for the 16 consecutive vertices starting at `first` (loaded).
HBFS_AVX512 inline RowRanges load_ranges(const offset_t* rows, std::uint64_t first,
                                         __mmask16 valid) {
  const auto m_lo = static_cast<__mmask8>(valid);
  const auto m_hi = static_cast<__mmask8>(valid >> 8);
  const offset_t* p = rows + first;
  return {_mm512_maskz_loadu_epi64(m_lo, p), _mm512_maskz_loadu_epi64(m_hi, p + 8),
          _mm512_maskz_loadu_epi64(m_lo, p + 1), _mm512_maskz_loadu_epi64(m_hi, p + 9)};
}

struct Adj {
  __m512i neighbors;
  __mmask16 active;
};

// adjacency[start + pos] for candidate lanes whose row is longer than pos.
HBFS_AVX512 inline Adj gather_adj(const vertex_t* adjacency, const RowRanges& r,
                                  std::uint32_t pos, __mmask16 cand) {
  const __m512i vpos = _mm512_set1_epi64(pos);
  const __m512i at_lo = _mm512_add_epi64(r.start_lo, vpos);
  const __m512i at_hi = _mm512_add_epi64(r.start_hi, vpos);
  const __mmask8 ok_lo =
      _mm512_mask_cmplt_epu64_mask(static_cast<__mmask8>(cand), at_lo, r.end_lo);
  const __mmask8 ok_hi =
      _mm512_mask_cmplt_epu64_mask(static_cast<__mmask8>(cand >> 8), at_hi, r.end_hi);
  const __m256i zero = _mm256_setzero_si256();
  const __m256i lo = _mm512_mask_i64gather_epi32(zero, ok_lo, at_lo, adjacency, 4);
  const __m256i hi = _mm512_mask_i64gather_epi32(zero, ok_hi, at_hi, adjacency, 4);
  return {_mm512_inserti64x4(_mm512_castsi256_si512(lo), hi, 1),
          static_cast<__mmask16>(ok_lo | (static_cast<unsigned>(ok_hi) << 8))};
}

// Lanes of `active` whose neighbour is set in `frontier`.
HBFS_AVX512 inline __mmask16 in_frontier(const std::uint32_t* frontier, __m512i neighbors,
                                         __mmask16 active) {
  const __m512i vword = _mm512_srli_epi32(neighbors, 5);
  const __m512i vbits = _mm512_and_epi32(neighbors, _mm512_set1_epi32(0x1F));
  const __m512i words =
      _mm512_mask_i32gather_epi32(_mm512_setzero_si512(), active, vword, frontier, 4);
  const __m512i bits = _mm512_sllv_epi32(_mm512_set1_epi32(1), vbits);
  return _mm512_mask_test_epi32_mask(active, words, bits);
}

HBFS_AVX512 inline std::uint64_t degree_sum(const RowRanges& r, __mmask16 m) {
  const __m512i d_lo = _mm512_sub_epi64(r.end_lo, r.start_lo);
  const __m512i d_hi = _mm512_sub_epi64(r.end_hi, r.start_hi);
  return static_cast<std::uint64_t>(
      _mm512_mask_reduce_add_epi64(static_cast<__mmask8>(m), d_lo) +
      _mm512_mask_reduce_add_epi64(static_cast<__mmask8>(m >> 8), d_hi));
}

}  // namespace

bool compiled_in() { return true; }

bool cpu_supported() { return __builtin_cpu_supports("avx512f"); }

HBFS_AVX512 LaneVector masked_gather(std::span<const std::uint32_t> base,
                                     const LaneVector& idx, LaneMask m, std::uint32_t fill) {
#ifndef NDEBUG
  for (int i = 0; i < kLanes; ++i) assert(!m.test(i) || idx[i] < base.size());
#endif
  const __m512i r = _mm512_mask_i32gather_epi32(_mm512_set1_epi32(static_cast<int>(fill)),
                                                m.bits(), to_m512(idx), base.data(), 4);
  return from_m512(r);
}

HBFS_AVX512 void masked_scatter(std::span<std::uint32_t> base, const LaneVector& idx,
                                const LaneVector& vals, LaneMask m) {
#ifndef NDEBUG
  for (int i = 0; i < kLanes; ++i) assert(!m.test(i) || idx[i] < base.size());
#endif
  _mm512_mask_i32scatter_epi32(base.data(), m.bits(), to_m512(idx), to_m512(vals), 4);
}

HBFS_AVX512 AdjacentLanes load_adj(const CsrGraph& g, const LaneVector& vertices,
                                   std::uint32_t pos, LaneMask mask_done,
                                   std::uint16_t mask_vis) {
  const __m512i vv = to_m512(vertices);
  const __mmask16 in_range =
      _mm512_cmplt_epu32_mask(vv, _mm512_set1_epi32(static_cast<int>(g.num_vertices())));
  const auto cand = static_cast<__mmask16>(in_range & ~mask_vis & ~mask_done.bits());
  const RowRanges r = gather_ranges(g.row_starts().data(), vv, cand);
  const Adj a = gather_adj(g.adjacency().data(), r, pos, cand);
  return {from_m512(a.neighbors), LaneMask(a.active)};
}

HBFS_AVX512 ProbeResult looking_parents(const CsrGraph& g, const Bitmap& in, Bitmap& vis,
                                        Bitmap& out, BfsTree& tree, const LaneVector& vertices,
                                        std::uint32_t pos, std::size_t word_index,
                                        unsigned half, std::uint16_t mask_vis,
                                        LaneMask& mask_done) {
  const __m512i vv = to_m512(vertices);
  const __mmask16 in_range =
      _mm512_cmplt_epu32_mask(vv, _mm512_set1_epi32(static_cast<int>(g.num_vertices())));
  const auto cand = static_cast<__mmask16>(in_range & ~mask_vis & ~mask_done.bits());
  const RowRanges r = gather_ranges(g.row_starts().data(), vv, cand);
  const Adj a = gather_adj(g.adjacency().data(), r, pos, cand);
  const __mmask16 found = in_frontier(in.words().data(), a.neighbors, a.active);
  if (found != 0) {
    _mm512_mask_i32scatter_epi32(tree.parent.data(), found, vv, a.neighbors, 4);
    vis.or_half(word_index, half, found);
    out.or_half(word_index, half, found);
    mask_done |= LaneMask(found);
  }
  return {LaneMask(a.active), LaneMask(found)};
}

namespace {

// Row bounds of the 16 consecutive vertices starting at `first` as 32-bit
// lanes.  Only valid when every offset fits in a signed 32-bit index.
struct NarrowRanges {
  __m512i start, end;
};

HBFS_AVX512 inline NarrowRanges narrow(const RowRanges& r) {
  return {_mm512_inserti64x4(_mm512_castsi256_si512(_mm512_cvtepi64_epi32(r.start_lo)),
                             _mm512_cvtepi64_epi32(r.start_hi), 1),
          _mm512_inserti64x4(_mm512_castsi256_si512(_mm512_cvtepi64_epi32(r.end_lo)),
                             _mm512_cvtepi64_epi32(r.end_hi), 1)};
}

// Lanes whose row has an entry at `pos`.
HBFS_AVX512 inline __mmask16 has_pos(const RowRanges& r, std::uint32_t pos, __mmask16 m) {
  const __m512i vpos = _mm512_set1_epi64(pos);
  const __mmask8 lo = _mm512_mask_cmplt_epu64_mask(static_cast<__mmask8>(m),
                                                   _mm512_add_epi64(r.start_lo, vpos), r.end_lo);
  const __mmask8 hi = _mm512_mask_cmplt_epu64_mask(static_cast<__mmask8>(m >> 8),
                                                   _mm512_add_epi64(r.start_hi, vpos), r.end_hi);
  return static_cast<__mmask16>(lo | (static_cast<unsigned>(hi) << 8));
}

HBFS_AVX512 inline __mmask16 has_pos(const NarrowRanges& r, std::uint32_t pos, __mmask16 m) {
  return _mm512_mask_cmplt_epu32_mask(
      m, _mm512_add_epi32(r.start, _mm512_set1_epi32(static_cast<int>(pos))), r.end);
}

HBFS_AVX512 inline __m512i gather_at(const vertex_t* adjacency, const RowRanges& r,
                                     std::uint32_t pos, __mmask16 ok) {
  const __m512i vpos = _mm512_set1_epi64(pos);
  const __m256i zero = _mm256_setzero_si256();
  const __m256i lo = _mm512_mask_i64gather_epi32(
      zero, static_cast<__mmask8>(ok), _mm512_add_epi64(r.start_lo, vpos), adjacency, 4);
  const __m256i hi = _mm512_mask_i64gather_epi32(
      zero, static_cast<__mmask8>(ok >> 8), _mm512_add_epi64(r.start_hi, vpos), adjacency, 4);
  return _mm512_inserti64x4(_mm512_castsi256_si512(lo), hi, 1);
}

HBFS_AVX512 inline __m512i gather_at(const vertex_t* adjacency, const NarrowRanges& r,
                                     std::uint32_t pos, __mmask16 ok) {
  const __m512i at = _mm512_add_epi32(r.start, _mm512_set1_epi32(static_cast<int>(pos)));
  return _mm512_mask_i32gather_epi32(_mm512_setzero_si512(), ok, at, adjacency, 4);
}

struct WordResult {
  std::uint32_t found;
  std::uint64_t e_f, fallbacks, gathers;
};

// Both halves of one bitmap word.  The halves advance through the adjacency
// positions in lockstep so their gathers overlap.  Vertices of this word are
// written only by the calling thread.
template <bool Narrow>
HBFS_AVX512 WordResult bottom_up_word(const offset_t* rows, const vertex_t* adjacency,
                                      const Bitmap& in, vertex_t* parent, std::uint64_t n,
                                      std::size_t wi, std::uint32_t vis_word,
                                      std::uint32_t valid_word, std::uint32_t max_pos) {
  using Ranges = std::conditional_t<Narrow, NarrowRanges, RowRanges>;
  const std::uint32_t* frontier = in.words().data();
  RowRanges wide[2]{};
  Ranges r[2]{};
  __mmask16 cand[2] = {0, 0};
  __mmask16 done[2] = {0, 0};

  for (unsigned h = 0; h < 2; ++h) {
    const std::uint64_t first = std::uint64_t{wi} * 32 + h * 16;
    if (first >= n) break;
    const auto valid = static_cast<__mmask16>(valid_word >> (h * 16));
    const auto unvisited = static_cast<__mmask16>(~(vis_word >> (h * 16)) & valid);
    if (unvisited == 0) continue;
    wide[h] = load_ranges(rows, first, valid);
    if constexpr (Narrow) {
      r[h] = narrow(wide[h]);
    } else {
      r[h] = wide[h];
    }
    cand[h] = unvisited;
  }

  std::uint64_t gathers = 0;
  for (std::uint32_t pos = 0; pos < max_pos; ++pos) {
    const __mmask16 ok0 = has_pos(r[0], pos, cand[0]);
    const __mmask16 ok1 = has_pos(r[1], pos, cand[1]);
    if ((ok0 | ok1) == 0) break;
    const __m512i adj0 = gather_at(adjacency, r[0], pos, ok0);
    const __m512i adj1 = gather_at(adjacency, r[1], pos, ok1);
    const __mmask16 f0 = in_frontier(frontier, adj0, ok0);
    const __mmask16 f1 = in_frontier(frontier, adj1, ok1);
    gathers += (ok0 != 0 ? 2 : 0) + (ok1 != 0 ? 2 : 0);
    // The 16 vertices of a half are consecutive, so the parent scatter is a
    // masked store.
    if (f0 != 0) _mm512_mask_storeu_epi32(parent + wi * 32, f0, adj0);
    if (f1 != 0) _mm512_mask_storeu_epi32(parent + wi * 32 + 16, f1, adj1);
    done[0] |= f0;
    done[1] |= f1;
    cand[0] &= static_cast<__mmask16>(~f0);
    cand[1] &= static_cast<__mmask16>(~f1);
  }

  WordResult res{0, 0, 0, gathers};
  for (unsigned h = 0; h < 2; ++h) {
    const std::uint64_t first = std::uint64_t{wi} * 32 + h * 16;
    // Only rows with entries past max_pos have anything left to search.
    auto pending = static_cast<unsigned>(has_pos(r[h], max_pos, cand[h]));
    res.fallbacks += static_cast<std::uint64_t>(std::popcount(pending));
    while (pending != 0) {
      const int lane = std::countr_zero(pending);
      pending &= pending - 1;
      const std::uint64_t v = first + static_cast<unsigned>(lane);
      const offset_t end = rows[v + 1];
      const offset_t begin = rows[v] + max_pos;
      for (offset_t k = begin; k < end; ++k) {
        const vertex_t candidate = adjacency[k];
        if (detail::has_bit(in, candidate)) {
          parent[v] = candidate;
          done[h] |= static_cast<__mmask16>(1u << lane);
          break;
        }
      }
    }
    if (done[h] != 0) {
      res.found |= static_cast<std::uint32_t>(done[h]) << (h * 16);
      res.e_f += degree_sum(wide[h], done[h]);
    }
  }
  return res;
}

}  // namespace

HBFS_AVX512 LayerCounters bottom_up_multiple_set(const CsrGraph& g, const Bitmap& in,
                                                 Bitmap& vis, Bitmap& out, BfsTree& tree,
                                                 std::uint32_t max_pos,
                                                 std::uint64_t unvisited_edges) {
  const offset_t* rows = g.row_starts().data();
  const vertex_t* adjacency = g.adjacency().data();
  vertex_t* parent = tree.parent.data();
  const std::uint64_t n = g.num_vertices();
  const bool narrow_ok = g.num_arcs() <= 0x7FFFFFFFu;
  const auto words = static_cast<std::int64_t>(vis.word_count());
  std::uint64_t v_f = 0, e_f = 0, fallbacks = 0, gathers = 0;

#pragma omp parallel for schedule(dynamic, 64) reduction(+ : v_f, e_f, fallbacks, gathers)
  for (std::int64_t w = 0; w < words; ++w) {
    const auto wi = static_cast<std::size_t>(w);
    const std::uint32_t valid_word = detail::valid_bits(n, wi);
    const std::uint32_t vis_word = vis.word(wi);
    if ((vis_word & valid_word) == valid_word) continue;

    const WordResult r =
        narrow_ok ? bottom_up_word<true>(rows, adjacency, in, parent, n, wi, vis_word,
                                         valid_word, max_pos)
                  : bottom_up_word<false>(rows, adjacency, in, parent, n, wi, vis_word,
                                          valid_word, max_pos);
    fallbacks += r.fallbacks;
    gathers += r.gathers;
    if (r.found != 0) {
      vis.or_word(wi, r.found);
      out.or_word(wi, r.found);
      v_f += static_cast<std::uint64_t>(std::popcount(r.found));
      e_f += r.e_f;
    }
  }
  return {e_f, v_f, detail::saturating_sub(unvisited_edges, e_f), fallbacks, gathers};
}

HBFS_AVX512 LayerCounters top_down_chunked(const CsrGraph& g, const Bitmap& in, Bitmap& vis,
                                           Bitmap& out, BfsTree& tree,
                                           std::uint64_t unvisited_edges) {
  const offset_t* rows = g.row_starts().data();
  const vertex_t* adjacency = g.adjacency().data();
  const std::uint32_t* visited = vis.words().data();
  vertex_t* parent = tree.parent.data();
  const auto words = static_cast<std::int64_t>(in.word_count());
  std::uint64_t v_f = 0, e_f = 0, gathers = 0;

#pragma omp parallel for schedule(dynamic, 64) reduction(+ : v_f, e_f, gathers)
  for (std::int64_t w = 0; w < words; ++w) {
    std::uint32_t frontier = in.word(static_cast<std::size_t>(w));
    while (frontier != 0) {
      const auto u = static_cast<vertex_t>(w * 32 + std::countr_zero(frontier));
      frontier &= frontier - 1;
      const __m512i parent_vec = _mm512_set1_epi32(static_cast<int>(u));
      const offset_t end = rows[u + 1];
      for (offset_t c = rows[u]; c < end; c += kLanes) {
        const std::uint64_t len = end - c;
        const auto tail = static_cast<__mmask16>(len >= kLanes ? 0xFFFFu : (1u << len) - 1u);
        const __m512i nbrs = _mm512_maskz_loadu_epi32(tail, adjacency + c);
        const __mmask16 seen = in_frontier(visited, nbrs, tail);
        ++gathers;
        auto unvisited = static_cast<unsigned>(static_cast<__mmask16>(tail & ~seen));
        if (unvisited == 0) continue;

        alignas(64) std::array<std::uint32_t, kLanes> lanes;
        _mm512_store_si512(lanes.data(), nbrs);
        __mmask16 claimed = 0;
        while (unvisited != 0) {
          const int lane = std::countr_zero(unvisited);
          unvisited &= unvisited - 1;
          const vertex_t v = lanes[lane];
          if (!detail::claim_bit(vis, v)) continue;
          claimed |= static_cast<__mmask16>(1u << lane);
          out.or_word(v >> 5, 1u << (v & 0x1F));
          ++v_f;
          e_f += rows[v + 1] - rows[v];
        }
        if (claimed != 0) _mm512_mask_i32scatter_epi32(parent, claimed, nbrs, parent_vec, 4);
      }
    }
  }
  return {e_f, v_f, detail::saturating_sub(unvisited_edges, e_f), 0, gathers};
}

}  // namespace hbfs::simd::avx512

#else  // !HBFS_HAVE_AVX512

namespace hbfs::simd::avx512 {

namespace {
[[noreturn]] void unavailable() {
  throw std::logic_error("AVX-512 backend is not compiled into this build");
}
}  // namespace

bool compiled_in() { return false; }
bool cpu_supported() { return false; }

LaneVector masked_gather(std::span<const std::uint32_t>, const LaneVector&, LaneMask,
                         std::uint32_t) {
  unavailable();
}
void masked_scatter(std::span<std::uint32_t>, const LaneVector&, const LaneVector&, LaneMask) {
  unavailable();
}
AdjacentLanes load_adj(const CsrGraph&, const LaneVector&, std::uint32_t, LaneMask,
                       std::uint16_t) {
  unavailable();
}
ProbeResult looking_parents(const CsrGraph&, const Bitmap&, Bitmap&, Bitmap&, BfsTree&,
                            const LaneVector&, std::uint32_t, std::size_t, unsigned,
                            std::uint16_t, LaneMask&) {
  unavailable();
}
LayerCounters bottom_up_multiple_set(const CsrGraph&, const Bitmap&, Bitmap&, Bitmap&,
                                     BfsTree&, std::uint32_t, std::uint64_t) {
  unavailable();
}
LayerCounters top_down_chunked(const CsrGraph&, const Bitmap&, Bitmap&, Bitmap&, BfsTree&,
                               std::uint64_t) {
  unavailable();
}

}  // namespace hbfs::simd::avx512

#endif

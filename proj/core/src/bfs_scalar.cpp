#include "hbfs/bfs_scalar.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "bitops.hpp"

namespace hbfs {

using detail::claim_bit;
using detail::has_bit;

LayerCounters top_down_layer(const CsrGraph& g, const Bitmap& in, Bitmap& vis,
                             Bitmap& out, BfsTree& tree,
                             std::uint64_t unvisited_edges) {
  const auto rows = g.row_starts();
  const auto adj = g.adjacency();
  const auto words = static_cast<std::int64_t>(in.word_count());
  std::uint64_t v_f = 0;
  std::uint64_t e_f = 0;

#pragma omp parallel for schedule(dynamic, 64) reduction(+ : v_f, e_f)
  for (std::int64_t w = 0; w < words; ++w) {
    std::uint32_t frontier = in.word(static_cast<std::size_t>(w));
    while (frontier != 0) {
      const auto u = static_cast<vertex_t>(w * 32 + std::countr_zero(frontier));
      frontier &= frontier - 1;
      for (offset_t k = rows[u]; k < rows[u + 1]; ++k) {
        const vertex_t v = adj[k];
        if (has_bit(vis, v) || !claim_bit(vis, v)) continue;
        tree.parent[v] = u;
        out.or_word(v >> 5, 1u << (v & 0x1F));
        ++v_f;
        e_f += rows[v + 1] - rows[v];
      }
    }
  }
  return {e_f, v_f, detail::saturating_sub(unvisited_edges, e_f), 0, 0};
}

LayerCounters bottom_up_layer(const CsrGraph& g, const Bitmap& in, Bitmap& vis,
                              Bitmap& out, BfsTree& tree,
                              std::uint64_t unvisited_edges) {
  const auto rows = g.row_starts();
  const auto adj = g.adjacency();
  const std::uint64_t n = g.num_vertices();
  const auto words = static_cast<std::int64_t>(vis.word_count());
  std::uint64_t v_f = 0;
  std::uint64_t e_f = 0;

#pragma omp parallel for schedule(dynamic, 64) reduction(+ : v_f, e_f)
  for (std::int64_t w = 0; w < words; ++w) {
    const auto wi = static_cast<std::size_t>(w);
    std::uint32_t pending = ~vis.word(wi) & detail::valid_bits(n, wi);
    std::uint32_t found = 0;
    while (pending != 0) {
      const int bit = std::countr_zero(pending);
      pending &= pending - 1;
      const auto v = static_cast<vertex_t>(w * 32 + bit);
      for (offset_t k = rows[v]; k < rows[v + 1]; ++k) {
        const vertex_t candidate = adj[k];
        if (has_bit(in, candidate)) {
          tree.parent[v] = candidate;
          found |= 1u << bit;
          ++v_f;
          e_f += rows[v + 1] - rows[v];
          break;
        }
      }
    }
    if (found != 0) {
      vis.or_word(wi, found);
      out.or_word(wi, found);
    }
  }
  return {e_f, v_f, detail::saturating_sub(unvisited_edges, e_f), 0, 0};
}

ReferenceBfs bfs_reference(const CsrGraph& g, vertex_t source) {
  const vertex_t n = g.num_vertices();
  if (source >= n) {
    throw std::out_of_range("source " + std::to_string(source) + " out of range");
  }
  ReferenceBfs r{BfsTree(n, source), std::vector<std::uint32_t>(n, kUnreached)};
  std::vector<vertex_t> queue;
  queue.reserve(n);
  queue.push_back(source);
  r.levels[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const vertex_t u = queue[head];
    for (vertex_t v : g.neighbors(u)) {
      if (r.levels[v] != kUnreached) continue;
      r.levels[v] = r.levels[u] + 1;
      r.tree.parent[v] = u;
      queue.push_back(v);
    }
  }
  return r;
}

std::vector<std::uint32_t> tree_levels(const BfsTree& tree) {
  const std::size_t n = tree.parent.size();
  std::vector<std::uint32_t> levels(n, kUnreached);
  if (tree.source >= n) return levels;

  enum : std::uint8_t { kUnknown, kOnPath, kDone };
  std::vector<std::uint8_t> state(n, kUnknown);
  levels[tree.source] = 0;
  state[tree.source] = kDone;

  std::vector<vertex_t> path;
  for (std::size_t start = 0; start < n; ++start) {
    if (state[start] != kUnknown) continue;
    path.clear();
    auto cur = static_cast<vertex_t>(start);
    std::uint32_t base = kUnreached;
    for (;;) {
      if (state[cur] == kDone) {
        base = levels[cur];
        break;
      }
      if (state[cur] == kOnPath) break;  // cycle
      state[cur] = kOnPath;
      path.push_back(cur);
      const vertex_t p = tree.parent[cur];
      if (p == kNil || p >= n) break;
      cur = p;
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (base != kUnreached) ++base;
      levels[*it] = base;
      state[*it] = kDone;
    }
  }
  return levels;
}

}  // namespace hbfs

#include "hbfs/hybrid.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "hbfs/bfs_scalar.hpp"

namespace hbfs {

void HeuristicParams::validate() const {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  if (beta < 1) throw std::invalid_argument("beta must be >= 1");
}

std::uint64_t f_threshold(const HeuristicParams& p, std::uint64_t /*n*/, const LayerCounters& c) {
  return c.e_u / p.alpha;
}

std::uint64_t g_threshold(const HeuristicParams& p, std::uint64_t n, const LayerCounters& /*c*/) {
  return n / p.beta;
}

Direction decide(const HeuristicParams& p, Direction current, std::uint64_t frontier_size,
                 std::uint64_t n, const LayerCounters& c) {
  const bool above_f = frontier_size > f_threshold(p, n, c);
  const bool below_g = frontier_size < g_threshold(p, n, c);
  if (p.rule == SwitchRule::per_direction) {
    if (current == Direction::top_down) return above_f ? Direction::bottom_up : current;
    return below_g ? Direction::top_down : current;
  }
  if (above_f) return Direction::bottom_up;
  if (below_g) return Direction::top_down;
  return current;
}

HybridResult hybrid_bfs(const CsrGraph& g, vertex_t source, const HeuristicParams& p,
                        const VecConfig& cfg, bool use_simd, std::optional<Direction> forced) {
  p.validate();
  cfg.validate();
  const std::uint64_t n = g.num_vertices();
  if (source >= n) {
    throw std::out_of_range("source " + std::to_string(source) + " out of range");
  }

  HybridResult result{BfsTree(n, source), {}};
  Bitmap in(n), out(n), vis(n);
  in.set_atomic(source);
  vis.set_atomic(source);

  const std::uint64_t source_degree = g.degree(source);
  std::uint64_t unvisited_edges = g.num_arcs() - source_degree;
  std::uint64_t unvisited_vertices = n - 1;
  const auto unvisited = [&] {
    return p.counter_mode == CounterMode::vertex ? unvisited_vertices : unvisited_edges;
  };

  LayerCounters counters{source_degree, 1, unvisited(), 0, 0};
  Direction direction = Direction::top_down;
  const KernelKind kind = use_simd ? KernelKind::simd : KernelKind::scalar;

  for (std::uint32_t layer = 1; counters.v_f != 0; ++layer) {
    const std::uint64_t f = f_threshold(p, n, counters);
    const std::uint64_t gv = g_threshold(p, n, counters);
    direction = forced ? *forced : decide(p, direction, counters.v_f, n, counters);

    const auto t0 = std::chrono::steady_clock::now();
    LayerCounters layer_result;
    if (direction == Direction::top_down) {
      layer_result = use_simd ? top_down_chunked(g, in, vis, out, result.tree, cfg, unvisited_edges)
                              : top_down_layer(g, in, vis, out, result.tree, unvisited_edges);
    } else {
      layer_result = use_simd
                         ? bottom_up_multiple_set(g, in, vis, out, result.tree, cfg, unvisited_edges)
                         : bottom_up_layer(g, in, vis, out, result.tree, unvisited_edges);
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;

    result.trace.push_back(LayerTraceRow{layer, direction, kind, counters.v_f, counters.e_f,
                                         counters.e_u, f, gv, elapsed.count(),
                                         layer_result.fallbacks, layer_result.gathers});

    unvisited_edges = layer_result.e_u;
    unvisited_vertices -= layer_result.v_f;
    counters = LayerCounters{layer_result.e_f, layer_result.v_f, unvisited(), 0, 0};
    in.swap(out);
    out.clear();
  }
  return result;
}

std::string_view to_string(Direction d) {
  return d == Direction::top_down ? "top-down" : "bottom-up";
}

std::string_view to_string(KernelKind k) { return k == KernelKind::scalar ? "scalar" : "simd"; }

std::string_view to_string(SwitchRule r) {
  return r == SwitchRule::per_direction ? "per-direction" : "as-written";
}

std::optional<SwitchRule> parse_switch_rule(std::string_view s) {
  if (s == "per-direction") return SwitchRule::per_direction;
  if (s == "as-written") return SwitchRule::as_written;
  return std::nullopt;
}

}  // namespace hbfs

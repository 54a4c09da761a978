#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hbfs/bfs_vector.hpp"
#include "hbfs/csr.hpp"
#include "hbfs/frontier.hpp"

namespace hbfs {

enum class Direction { top_down, bottom_up };
enum class KernelKind { scalar, simd };

// How the unvisited counter fed to the switching heuristic is measured.
enum class CounterMode {
  vertex,  // number of unvisited vertices
  edge,    // sum of degrees of unvisited vertices
};

// How the two threshold tests combine.
enum class SwitchRule {
  // From top-down, go bottom-up when |in| > f; from bottom-up, go back to
  // top-down when |in| < g.  Reproduces every row of the reference switching
  // table.
  per_direction,
  // Test |in| > f first and |in| < g only when it fails, whatever the current
  // direction.  A bottom-up run then needs |in| <= f before it can return.
  as_written,
};

struct HeuristicParams {
  std::uint64_t alpha = 1024;  // switch to bottom-up when |in| > e_u / alpha
  std::uint64_t beta = 64;     // return to top-down when |in| < n / beta
  CounterMode counter_mode = CounterMode::vertex;
  SwitchRule rule = SwitchRule::per_direction;

  void validate() const;
};

std::uint64_t f_threshold(const HeuristicParams& p, std::uint64_t n, const LayerCounters& c);
std::uint64_t g_threshold(const HeuristicParams& p, std::uint64_t n, const LayerCounters& c);

/// Next direction under p.rule; keeps `current` when no test fires.
Direction decide(const HeuristicParams& p, Direction current,
                 std::uint64_t frontier_size, std::uint64_t n,
                 const LayerCounters& c);

/// One row per layer.  v_f, e_f and e_u describe the frontier the layer
/// consumed (counters gathered at the end of the previous layer), f and g the
/// thresholds the direction was chosen with.
struct LayerTraceRow {
  std::uint32_t layer = 0;
  Direction direction = Direction::top_down;
  KernelKind kernel = KernelKind::scalar;
  std::uint64_t v_f = 0;
  std::uint64_t e_f = 0;
  std::uint64_t e_u = 0;
  std::uint64_t f_value = 0;
  std::uint64_t g_value = 0;
  double seconds = 0.0;
  std::uint64_t fallback_count = 0;
  std::uint64_t gather_count = 0;
};

struct HybridResult {
  BfsTree tree;
  std::vector<LayerTraceRow> trace;
};

/// Layer-synchronous BFS that picks a direction per layer.  With use_simd the
/// vector kernels run both directions.  `forced` pins every layer to one
/// direction.  Throws std::out_of_range for a bad source.
HybridResult hybrid_bfs(const CsrGraph& g, vertex_t source,
                        const HeuristicParams& p, const VecConfig& cfg,
                        bool use_simd,
                        std::optional<Direction> forced = std::nullopt);

std::string_view to_string(Direction d);
std::string_view to_string(KernelKind k);
std::string_view to_string(SwitchRule r);
/// Parses "per-direction" or "as-written".
std::optional<SwitchRule> parse_switch_rule(std::string_view s);

}  // namespace hbfs

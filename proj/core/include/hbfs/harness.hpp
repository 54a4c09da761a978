#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hbfs/csr.hpp"
#include "hbfs/frontier.hpp"
#include "hbfs/generator.hpp"
#include "hbfs/hybrid.hpp"

namespace hbfs {

enum class Mode { scalar_td, scalar_bu, scalar_hybrid, simd_hybrid };

std::string_view to_string(Mode m);
/// Parses "scalar-td", "scalar-bu", "scalar-hybrid" or "simd-hybrid".
std::optional<Mode> parse_mode(std::string_view s);

/// Runs one traversal in the given mode.
HybridResult run_bfs(const CsrGraph& g, vertex_t source, Mode mode,
                     const HeuristicParams& heuristic, const VecConfig& cfg);

/// `count` distinct vertices, deterministic in `seed`.  Unless
/// allow_isolated, only vertices of degree >= 1 are eligible; throws
/// std::invalid_argument when fewer than `count` vertices are eligible.
std::vector<vertex_t> sample_sources(const CsrGraph& g, std::size_t count,
                                     std::uint64_t seed,
                                     bool allow_isolated = false);

// ---------------------------------------------------------------------------
// Tree validation
//
// Rules, checked in the order 1, 2, 5, 3, 4 and reported by number:
//   1. parent[source] == source
//   2. every non-nil parent[v] is a neighbour of v
//   3. parent chains reach the source without cycles, and
//      level(v) == level(parent[v]) + 1
//   4. every edge between visited vertices spans at most one level
//   5. v is visited iff v is reachable from the source
// ---------------------------------------------------------------------------

struct Violation {
  int rule = 0;
  vertex_t vertex = kNil;
  vertex_t other = kNil;  // second endpoint for edge witnesses
  std::string message;
};

struct ValidationResult {
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
};

ValidationResult validate_tree(const CsrGraph& g, vertex_t source, const BfsTree& tree);

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

/// edges / seconds.  Throws std::invalid_argument for seconds <= 0.
double teps(std::uint64_t edges, double seconds);

/// k / sum(1 / v_i).  Throws std::invalid_argument on empty input or a
/// non-positive value.
double harmonic_mean(std::span<const double> values);

// ---------------------------------------------------------------------------
// Benchmark driver
// ---------------------------------------------------------------------------

struct RunResult {
  vertex_t source = 0;
  double seconds = 0.0;
  double teps = 0.0;  // 0 when the source has no edges
  bool valid = false;
  std::string violation;
  std::vector<LayerTraceRow> trace;
  std::vector<std::uint32_t> levels;  // filled only with keep_levels
};

struct BenchmarkOptions {
  std::size_t runs = 64;
  int threads = 0;  // 0 keeps the OpenMP default
  bool allow_isolated_sources = false;
  bool validate = true;
  bool keep_levels = false;
};

struct BenchmarkReport {
  GraphParams params;
  Mode mode = Mode::scalar_hybrid;
  simd::Backend backend = simd::Backend::scalar_emulation;  // effective
  std::uint64_t teps_edges = 0;  // TEPS numerator: undirected input edges
  std::vector<RunResult> runs;
  double harmonic_mean_teps = 0.0;  // over runs with teps > 0
  double arithmetic_mean_teps = 0.0;
  std::size_t zero_teps_runs = 0;
  double min_seconds = 0.0;
  double max_seconds = 0.0;
  double mean_seconds = 0.0;

  std::size_t invalid_runs() const;
};

/// Times and validates `opts.runs` traversals from sampled sources over an
/// already-built graph.
BenchmarkReport run_benchmark(const CsrGraph& g, const GraphParams& params,
                              Mode mode, const HeuristicParams& heuristic,
                              const VecConfig& cfg,
                              const BenchmarkOptions& opts = {});

/// Generates and builds the graph, then runs the benchmark on it.
BenchmarkReport run_benchmark(const GraphParams& params, Mode mode,
                              const HeuristicParams& heuristic,
                              const VecConfig& cfg,
                              const BenchmarkOptions& opts = {});

// CSV output: headers included, LF line endings.
void write_report_csv(std::ostream& os, const BenchmarkReport& report);
void write_trace_csv(std::ostream& os, std::span<const LayerTraceRow> rows,
                     bool header = true);
void write_trace_csv(std::ostream& os, const BenchmarkReport& report);

}  // namespace hbfs

#include "hbfs/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "hbfs/bfs_scalar.hpp"

namespace hbfs {

namespace {

constexpr std::uint64_t kSourceStream = 0x736F757263657331ull;  // "sources1"

}  // namespace

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::scalar_td: return "scalar-td";
    case Mode::scalar_bu: return "scalar-bu";
    case Mode::scalar_hybrid: return "scalar-hybrid";
    case Mode::simd_hybrid: return "simd-hybrid";
  }
  return "unknown";
}

std::optional<Mode> parse_mode(std::string_view s) {
  for (Mode m : {Mode::scalar_td, Mode::scalar_bu, Mode::scalar_hybrid, Mode::simd_hybrid}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

HybridResult run_bfs(const CsrGraph& g, vertex_t source, Mode mode,
                     const HeuristicParams& heuristic, const VecConfig& cfg) {
  switch (mode) {
    case Mode::scalar_td:
      return hybrid_bfs(g, source, heuristic, cfg, false, Direction::top_down);
    case Mode::scalar_bu:
      return hybrid_bfs(g, source, heuristic, cfg, false, Direction::bottom_up);
    case Mode::scalar_hybrid:
      return hybrid_bfs(g, source, heuristic, cfg, false);
    case Mode::simd_hybrid:
      return hybrid_bfs(g, source, heuristic, cfg, true);
  }
  throw std::invalid_argument("unknown mode");
}

std::vector<vertex_t> sample_sources(const CsrGraph& g, std::size_t count, std::uint64_t seed,
                                     bool allow_isolated) {
  std::vector<vertex_t> eligible;
  eligible.reserve(g.num_vertices());
  const auto rows = g.row_starts();
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    if (allow_isolated || rows[v + 1] > rows[v]) eligible.push_back(v);
  }
  if (eligible.size() < count) {
    throw std::invalid_argument("only " + std::to_string(eligible.size()) +
                                " eligible source vertices, " + std::to_string(count) +
                                " requested");
  }
  // Partial Fisher-Yates: the first `count` slots become the sample.
  EdgeRng rng = EdgeRng::for_stream(seed, kSourceStream);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.next_below(eligible.size() - i);
    std::swap(eligible[i], eligible[j]);
  }
  eligible.resize(count);
  return eligible;
}

double teps(std::uint64_t edges, double seconds) {
  if (!(seconds > 0.0)) throw std::invalid_argument("TEPS needs a positive duration");
  return static_cast<double>(edges) / seconds;
}

double harmonic_mean(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("harmonic mean of an empty set");
  double inverse_sum = 0.0;
  for (double v : values) {
    if (!(v > 0.0)) throw std::invalid_argument("harmonic mean needs positive values");
    inverse_sum += 1.0 / v;
  }
  return static_cast<double>(values.size()) / inverse_sum;
}

std::size_t BenchmarkReport::invalid_runs() const {
  return static_cast<std::size_t>(
      std::count_if(runs.begin(), runs.end(), [](const RunResult& r) { return !r.valid; }));
}

BenchmarkReport run_benchmark(const CsrGraph& g, const GraphParams& params, Mode mode,
                              const HeuristicParams& heuristic, const VecConfig& cfg,
                              const BenchmarkOptions& opts) {
  heuristic.validate();
  cfg.validate();
  if (opts.threads > 0) omp_set_num_threads(opts.threads);

  BenchmarkReport report;
  report.params = params;
  report.mode = mode;
  report.backend = mode == Mode::simd_hybrid ? simd::effective_backend(cfg.backend)
                                             : simd::Backend::scalar_emulation;
  report.teps_edges = g.in_edges_total();

  const auto sources = sample_sources(g, opts.runs, params.seed, opts.allow_isolated_sources);
  report.runs.reserve(sources.size());
  for (vertex_t source : sources) {
    RunResult run;
    run.source = source;
    const auto t0 = std::chrono::steady_clock::now();
    HybridResult bfs = run_bfs(g, source, mode, heuristic, cfg);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
    run.seconds = elapsed.count();
    run.teps = g.degree(source) > 0 ? teps(report.teps_edges, run.seconds) : 0.0;
    if (opts.validate) {
      const ValidationResult check = validate_tree(g, source, bfs.tree);
      run.valid = check.ok();
      if (!check.ok()) {
        run.violation = "rule " + std::to_string(check.violation->rule) + ": " +
                        check.violation->message;
      }
    } else {
      run.valid = true;
    }
    if (opts.keep_levels) run.levels = tree_levels(bfs.tree);
    run.trace = std::move(bfs.trace);
    report.runs.push_back(std::move(run));
  }

  std::vector<double> positive;
  double seconds_sum = 0.0;
  report.min_seconds = report.runs.empty() ? 0.0 : report.runs.front().seconds;
  for (const RunResult& r : report.runs) {
    if (r.teps > 0.0) positive.push_back(r.teps);
    seconds_sum += r.seconds;
    report.min_seconds = std::min(report.min_seconds, r.seconds);
    report.max_seconds = std::max(report.max_seconds, r.seconds);
  }
  report.zero_teps_runs = report.runs.size() - positive.size();
  if (!positive.empty()) {
    report.harmonic_mean_teps = harmonic_mean(positive);
    report.arithmetic_mean_teps =
        std::accumulate(positive.begin(), positive.end(), 0.0) / static_cast<double>(positive.size());
  }
  if (!report.runs.empty()) {
    report.mean_seconds = seconds_sum / static_cast<double>(report.runs.size());
  }
  return report;
}

BenchmarkReport run_benchmark(const GraphParams& params, Mode mode,
                              const HeuristicParams& heuristic, const VecConfig& cfg,
                              const BenchmarkOptions& opts) {
  if (opts.threads > 0) omp_set_num_threads(opts.threads);
  const CsrGraph g = CsrGraph::build(generate(params));
  return run_benchmark(g, params, mode, heuristic, cfg, opts);
}

}  // namespace hbfs

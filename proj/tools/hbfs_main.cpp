// hbfs: generate a Kronecker graph, run timed BFS traversals from sampled
// sources, validate every tree and report TEPS.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "hbfs/csr.hpp"
#include "hbfs/generator.hpp"
#include "hbfs/harness.hpp"
#include "hbfs/hybrid.hpp"
#include "hbfs/lanes.hpp"

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

void print_summary(const hbfs::BenchmarkReport& r, const hbfs::CsrGraph& g,
                   const hbfs::HeuristicParams& h, const hbfs::VecConfig& cfg) {
  std::printf("graph         scale %u, edgefactor %u, seed %llu\n", r.params.scale,
              r.params.edgefactor, static_cast<unsigned long long>(r.params.seed));
  std::printf("              %llu vertices, %llu input edges, %llu arcs\n",
              static_cast<unsigned long long>(g.num_vertices()),
              static_cast<unsigned long long>(g.in_edges_total()),
              static_cast<unsigned long long>(g.num_arcs()));
  std::printf("mode          %s (backend %s, max_pos %u)\n",
              std::string(hbfs::to_string(r.mode)).c_str(), hbfs::simd::backend_name(r.backend),
              cfg.max_pos);
  std::printf("heuristic     alpha %llu, beta %llu, %s counter, %s rule\n",
              static_cast<unsigned long long>(h.alpha), static_cast<unsigned long long>(h.beta),
              h.counter_mode == hbfs::CounterMode::vertex ? "vertex" : "edge",
              std::string(hbfs::to_string(h.rule)).c_str());
  std::printf("runs          %zu (%zu invalid, %zu with zero TEPS)\n", r.runs.size(),
              r.invalid_runs(), r.zero_teps_runs);
  std::printf("time          min %.6f  mean %.6f  max %.6f s\n", r.min_seconds, r.mean_seconds,
              r.max_seconds);
  std::printf("TEPS          harmonic mean %.4e  arithmetic mean %.4e  (m = %llu)\n",
              r.harmonic_mean_teps, r.arithmetic_mean_teps,
              static_cast<unsigned long long>(r.teps_edges));
  for (const auto& run : r.runs) {
    if (!run.valid) {
      std::printf("invalid       source %u: %s\n", run.source, run.violation.c_str());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid top-down / bottom-up BFS benchmark"};

  hbfs::GraphParams params;
  params.scale = 16;
  params.edgefactor = 16;
  hbfs::HeuristicParams heuristic;
  hbfs::VecConfig cfg;
  hbfs::BenchmarkOptions opts;
  std::string mode_name = "simd-hybrid";
  std::string backend_name = "simd";
  std::string counter_name = "vertex";
  std::string rule_name = "per-direction";
  std::string report_path, trace_path, dump_path, load_path;
  bool no_permute = false;
  bool no_validate = false;

  const std::map<std::string, hbfs::Mode> modes{{"scalar-td", hbfs::Mode::scalar_td},
                                                {"scalar-bu", hbfs::Mode::scalar_bu},
                                                {"scalar-hybrid", hbfs::Mode::scalar_hybrid},
                                                {"simd-hybrid", hbfs::Mode::simd_hybrid}};
  const std::map<std::string, hbfs::simd::Backend> backends{
      {"simd", hbfs::simd::Backend::hardware_simd},
      {"emulate", hbfs::simd::Backend::scalar_emulation}};
  const std::map<std::string, hbfs::CounterMode> counters{{"vertex", hbfs::CounterMode::vertex},
                                                          {"edge", hbfs::CounterMode::edge}};
  const std::map<std::string, hbfs::SwitchRule> rules{
      {"per-direction", hbfs::SwitchRule::per_direction},
      {"as-written", hbfs::SwitchRule::as_written}};

  app.add_option("--scale", params.scale, "log2 of the vertex count")
      ->capture_default_str()
      ->check(CLI::Range(0u, hbfs::kMaxScale));
  app.add_option("--edgefactor", params.edgefactor, "edges per vertex")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", params.seed, "generator and source-sampling seed")
      ->capture_default_str();
  app.add_option("--mode", mode_name, "traversal mode")
      ->check(CLI::IsMember(modes))
      ->capture_default_str();
  app.add_option("--alpha", heuristic.alpha, "bottom-up switch divisor: f = e_u / alpha")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--beta", heuristic.beta, "top-down switch divisor: g = n / beta")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--counter", counter_name, "unvisited counter fed to f")
      ->check(CLI::IsMember(counters))
      ->capture_default_str();
  app.add_option("--switch-rule", rule_name, "how the f and g tests combine")
      ->check(CLI::IsMember(rules))
      ->capture_default_str();
  app.add_option("--max-pos", cfg.max_pos, "vector probes before the scalar search")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--backend", backend_name, "vector backend")
      ->check(CLI::IsMember(backends))
      ->capture_default_str();
  app.add_option("--runs", opts.runs, "number of sampled sources")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", opts.threads, "OpenMP worker count, 0 keeps the default")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--allow-isolated-sources", opts.allow_isolated_sources,
               "sample degree-0 vertices as sources too");
  app.add_flag("--no-permute", no_permute, "keep generator vertex labels");
  app.add_flag("--no-validate", no_validate, "skip tree validation");
  app.add_option("--out", report_path, "per-run report CSV");
  app.add_option("--trace-out", trace_path, "per-layer trace CSV");
  app.add_option("--dump-edges", dump_path, "write the generated edge list");
  app.add_option("--load-edges", load_path, "read the edge list instead of generating it")
      ->excludes("--dump-edges");

  CLI11_PARSE(app, argc, argv);

  try {
    const hbfs::Mode mode = modes.at(mode_name);
    cfg.backend = backends.at(backend_name);
    heuristic.counter_mode = counters.at(counter_name);
    heuristic.rule = rules.at(rule_name);
    params.permute_vertices = !no_permute;
    opts.validate = !no_validate;

    hbfs::EdgeList edges;
    if (!load_path.empty()) {
      std::ifstream in(load_path, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open " + load_path);
      edges = hbfs::read_edge_list(in);
      params = edges.params;
    } else {
      edges = hbfs::generate(params);
    }
    if (!dump_path.empty()) {
      std::ofstream out = open_output(dump_path);
      hbfs::write_edge_list(out, edges);
    }

    const hbfs::CsrGraph g = hbfs::CsrGraph::build(edges);
    edges = {};
    const hbfs::BenchmarkReport report =
        hbfs::run_benchmark(g, params, mode, heuristic, cfg, opts);

    if (!report_path.empty()) {
      std::ofstream out = open_output(report_path);
      hbfs::write_report_csv(out, report);
    }
    if (!trace_path.empty()) {
      std::ofstream out = open_output(trace_path);
      hbfs::write_trace_csv(out, report);
    }
    print_summary(report, g, heuristic, cfg);
    return report.invalid_runs() == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "hbfs: " << e.what() << '\n';
    return 1;
  }
}

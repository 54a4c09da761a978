#include "hbfs/harness.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "hbfs/bfs_scalar.hpp"
#include "oracles.hpp"

namespace hbfs {
namespace {

TEST(SampleSources, DeterministicInSeed) {
  const CsrGraph g = CsrGraph::build(testing::kronecker(10, 16, 1));
  EXPECT_EQ(sample_sources(g, 64, 5), sample_sources(g, 64, 5));
  EXPECT_NE(sample_sources(g, 64, 5), sample_sources(g, 64, 6));
}

TEST(SampleSources, FullSampleOfCompleteGraphIsAPermutation) {
  std::vector<Edge> edges;
  for (vertex_t u = 0; u < 12; ++u)
    for (vertex_t v = u + 1; v < 12; ++v) edges.push_back({u, v});
  const CsrGraph g = CsrGraph::build(12, edges);
  auto s = sample_sources(g, 12, 3);
  std::sort(s.begin(), s.end());
  for (vertex_t v = 0; v < 12; ++v) EXPECT_EQ(s[v], v);
}

TEST(SampleSources, DefaultPolicySkipsIsolatedVertices) {
  const CsrGraph g = CsrGraph::build(testing::kronecker(10, 4, 2));
  const auto sources = sample_sources(g, 200, 9);
  const std::set<vertex_t> distinct(sources.begin(), sources.end());
  EXPECT_EQ(distinct.size(), sources.size());
  for (vertex_t s : sources) EXPECT_GT(g.degree(s), 0u);
}

TEST(SampleSources, IsolatedAllowedOnRequest) {
  const CsrGraph g = CsrGraph::build(6, std::vector<Edge>{{0, 1}});
  EXPECT_THROW(sample_sources(g, 3, 1), std::invalid_argument);
  EXPECT_EQ(sample_sources(g, 6, 1, true).size(), 6u);
}

TEST(ValidateTree, AcceptsReferenceTrees) {
  const CsrGraph g = CsrGraph::build(testing::kronecker(10, 16, 4));
  for (vertex_t s = 0; s < g.num_vertices(); s += 3) {
    const ValidationResult r = validate_tree(g, s, bfs_reference(g, s).tree);
    ASSERT_TRUE(r.ok()) << r.violation->message;
  }
}

// 0-1-2-3 path plus a separate edge 4-5.
CsrGraph two_components() {
  return CsrGraph::build(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {4, 5}});
}

TEST(ValidateTree, RejectsWrongSourceParent) {
  const CsrGraph g = two_components();
  BfsTree t = bfs_reference(g, 0).tree;
  t.parent[0] = 1;
  const auto r = validate_tree(g, 0, t);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->rule, 1);
}

TEST(ValidateTree, RejectsNonNeighbourParent) {
  const CsrGraph g = two_components();
  BfsTree t = bfs_reference(g, 0).tree;
  t.parent[3] = 0;
  const auto r = validate_tree(g, 0, t);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->rule, 2);
  EXPECT_EQ(r.violation->vertex, 3u);
}

TEST(ValidateTree, RejectsParentCycle) {
  const CsrGraph g = two_components();
  BfsTree t = bfs_reference(g, 0).tree;
  t.parent[2] = 3;
  t.parent[3] = 2;
  const auto r = validate_tree(g, 0, t);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->rule, 3);
}

TEST(ValidateTree, RejectsVisitedButUnreachable) {
  const CsrGraph g = two_components();
  BfsTree t = bfs_reference(g, 0).tree;
  t.parent[5] = 4;
  const auto r = validate_tree(g, 0, t);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->rule, 5);
  EXPECT_EQ(r.violation->vertex, 5u);
}

TEST(ValidateTree, RejectsReachableButUnvisited) {
  const CsrGraph g = two_components();
  BfsTree t = bfs_reference(g, 0).tree;
  t.parent[3] = kNil;
  const auto r = validate_tree(g, 0, t);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->rule, 5);
}

TEST(ValidateTree, RejectsLevelSkippingEdge) {
  // Square 0-1-2-3-0 with chord-free tree that routes 3 through 2.
  const CsrGraph g = CsrGraph::build(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  BfsTree t(4, 0);
  t.parent[1] = 0;
  t.parent[2] = 1;
  t.parent[3] = 2;  // level 3, but edge 3-0 spans three levels
  const auto r = validate_tree(g, 0, t);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->rule, 4);
}

TEST(Teps, Arithmetic) {
  EXPECT_NEAR(teps(4'194'304, 0.004155), 1.0094e9, 1e5);
  EXPECT_EQ(teps(0, 1.0), 0.0);
  EXPECT_EQ(teps(100, 2.0), 50.0);
  EXPECT_THROW(teps(1, 0.0), std::invalid_argument);
  EXPECT_THROW(teps(1, -1.0), std::invalid_argument);
}

TEST(HarmonicMean, Arithmetic) {
  const std::vector<double> two_four{2.0, 4.0};
  EXPECT_NEAR(harmonic_mean(two_four), 8.0 / 3.0, 1e-15);
  const std::vector<double> constant(10, 3.5);
  EXPECT_NEAR(harmonic_mean(constant), 3.5, 1e-15);
  EXPECT_THROW(harmonic_mean(std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(harmonic_mean(std::vector<double>{1.0, 0.0}), std::invalid_argument);
}

TEST(HarmonicMean, MatchesLongDoubleEvaluationAndBoundsArithmeticMean) {
  std::mt19937_64 rng(8);
  std::lognormal_distribution<double> dist(20.0, 1.5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(64);
    for (auto& x : v) x = dist(rng);
    long double inv = 0, sum = 0;
    for (double x : v) {
      inv += 1.0L / x;
      sum += x;
    }
    const auto expected = static_cast<double>(v.size() / inv);
    const double h = harmonic_mean(v);
    EXPECT_LE(std::abs(h - expected) / expected, 1e-12);
    EXPECT_LE(h, static_cast<double>(sum / v.size()) * (1 + 1e-12));
  }
}

TEST(RunBenchmark, ScalarHybridSmoke) {
  GraphParams params;
  params.scale = 10;
  params.edgefactor = 16;
  BenchmarkOptions opts;
  opts.runs = 64;
  const BenchmarkReport report = run_benchmark(params, Mode::scalar_hybrid, {}, {}, opts);
  ASSERT_EQ(report.runs.size(), 64u);
  EXPECT_EQ(report.invalid_runs(), 0u);
  EXPECT_EQ(report.zero_teps_runs, 0u);
  EXPECT_EQ(report.teps_edges, params.num_edges());
  EXPECT_GT(report.harmonic_mean_teps, 0.0);
  EXPECT_LE(report.harmonic_mean_teps, report.arithmetic_mean_teps * (1 + 1e-12));
  EXPECT_LE(report.min_seconds, report.mean_seconds);
  EXPECT_LE(report.mean_seconds, report.max_seconds);
  for (const RunResult& r : report.runs) {
    EXPECT_TRUE(r.valid) << r.violation;
    EXPECT_FALSE(r.trace.empty());
  }
}

TEST(RunBenchmark, ModesAgreeOnValidityAndLevels) {
  GraphParams params;
  params.scale = 10;
  params.edgefactor = 16;
  params.seed = 77;
  const CsrGraph g = CsrGraph::build(generate(params));
  BenchmarkOptions opts;
  opts.runs = 16;
  opts.keep_levels = true;
  std::vector<BenchmarkReport> reports;
  for (Mode m : {Mode::scalar_td, Mode::scalar_bu, Mode::scalar_hybrid, Mode::simd_hybrid}) {
    reports.push_back(run_benchmark(g, params, m, {}, {}, opts));
  }
  for (const auto& rep : reports) {
    EXPECT_EQ(rep.teps_edges, params.num_edges());
    for (std::size_t i = 0; i < rep.runs.size(); ++i) {
      EXPECT_TRUE(rep.runs[i].valid);
      EXPECT_EQ(rep.runs[i].source, reports[0].runs[i].source);
      EXPECT_EQ(rep.runs[i].levels, reports[0].runs[i].levels);
    }
  }
}

TEST(RunBenchmark, IsolatedSourcesGiveZeroTepsExcludedFromMean) {
  GraphParams params;
  params.scale = 8;
  params.edgefactor = 2;
  const CsrGraph g = CsrGraph::build(generate(params));
  BenchmarkOptions opts;
  opts.runs = g.num_vertices();
  opts.allow_isolated_sources = true;
  const BenchmarkReport report = run_benchmark(g, params, Mode::scalar_hybrid, {}, {}, opts);
  std::size_t isolated = 0;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) isolated += g.degree(v) == 0;
  ASSERT_GT(isolated, 0u);
  EXPECT_EQ(report.zero_teps_runs, isolated);
  double max_teps = 0;
  for (const auto& r : report.runs) max_teps = std::max(max_teps, r.teps);
  EXPECT_LE(report.harmonic_mean_teps, max_teps);
}

TEST(ModeNames, RoundTrip) {
  for (Mode m : {Mode::scalar_td, Mode::scalar_bu, Mode::scalar_hybrid, Mode::simd_hybrid}) {
    EXPECT_EQ(parse_mode(to_string(m)), m);
  }
  EXPECT_FALSE(parse_mode("simd-td").has_value());
}

TEST(Csv, ReportAndTraceLayout) {
  BenchmarkReport report;
  report.params.scale = 4;
  report.params.edgefactor = 2;
  report.teps_edges = 32;
  RunResult run;
  run.source = 3;
  run.seconds = 0.5;
  run.teps = 64;
  run.valid = true;
  run.trace.push_back(LayerTraceRow{1, Direction::top_down, KernelKind::simd, 1, 5, 15, 0, 0,
                                    0.25, 0, 1});
  run.trace.push_back(LayerTraceRow{2, Direction::bottom_up, KernelKind::simd, 5, 20, 10, 0, 0,
                                    0.25, 2, 8});
  report.runs.push_back(run);
  report.runs.push_back(run);

  std::ostringstream rep;
  write_report_csv(rep, report);
  std::istringstream lines(rep.str());
  std::string comment, header, row;
  std::getline(lines, comment);
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(comment.rfind("# ", 0), 0u);
  EXPECT_NE(comment.find("teps_denominator=undirected_input_edges m=32"), std::string::npos);
  EXPECT_EQ(header, "source,seconds,teps,valid");
  EXPECT_EQ(row, "3,0.5,64,true");
  EXPECT_EQ(rep.str().find('\r'), std::string::npos);

  std::ostringstream tr;
  write_trace_csv(tr, report);
  EXPECT_EQ(tr.str(),
            "layer,direction,kernel,v_f,e_f,e_u,f,g,seconds,fallbacks,gathers\n"
            "1,top-down,simd,1,5,15,0,0,0.25,0,1\n"
            "2,bottom-up,simd,5,20,10,0,0,0.25,2,8\n"
            "1,top-down,simd,1,5,15,0,0,0.25,0,1\n"
            "2,bottom-up,simd,5,20,10,0,0,0.25,2,8\n");
}

}  // namespace
}  // namespace hbfs

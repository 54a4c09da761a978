#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "hbfs/bfs_scalar.hpp"
#include "hbfs/bfs_vector.hpp"
#include "hbfs/csr.hpp"
#include "hbfs/generator.hpp"
#include "hbfs/harness.hpp"
#include "hbfs/hybrid.hpp"

namespace {

using namespace hbfs;

const CsrGraph& graph(std::uint32_t scale) {
  static std::map<std::uint32_t, std::unique_ptr<CsrGraph>> cache;
  auto& slot = cache[scale];
  if (!slot) {
    GraphParams p;
    p.scale = scale;
    p.edgefactor = 16;
    slot = std::make_unique<CsrGraph>(CsrGraph::build(generate(p)));
  }
  return *slot;
}

// Frontier state just before `layer` of a traversal from a sampled source.
struct LayerState {
  Bitmap in, vis;
  BfsTree tree;
};

LayerState state_before(const CsrGraph& g, int layer) {
  const std::uint64_t n = g.num_vertices();
  const vertex_t source = sample_sources(g, 1, 1)[0];
  LayerState s{Bitmap(n), Bitmap(n), BfsTree(n, source)};
  s.in.set_atomic(source);
  s.vis.set_atomic(source);
  Bitmap out(n);
  for (int l = 1; l < layer; ++l) {
    bottom_up_layer(g, s.in, s.vis, out, s.tree);
    s.in.swap(out);
    out.clear();
  }
  return s;
}

enum Kernel { kScalarTopDown, kScalarBottomUp, kVectorTopDown, kVectorBottomUp };

void BM_Layer(benchmark::State& st) {
  const auto scale = static_cast<std::uint32_t>(st.range(0));
  const auto layer = static_cast<int>(st.range(1));
  const auto kernel = static_cast<Kernel>(st.range(2));
  const CsrGraph& g = graph(scale);
  const LayerState base = state_before(g, layer);
  const VecConfig cfg;
  for (auto _ : st) {
    st.PauseTiming();
    Bitmap vis = base.vis, out(g.num_vertices());
    BfsTree tree = base.tree;
    st.ResumeTiming();
    LayerCounters c;
    switch (kernel) {
      case kScalarTopDown: c = top_down_layer(g, base.in, vis, out, tree); break;
      case kScalarBottomUp: c = bottom_up_layer(g, base.in, vis, out, tree); break;
      case kVectorTopDown: c = top_down_chunked(g, base.in, vis, out, tree, cfg); break;
      case kVectorBottomUp: c = bottom_up_multiple_set(g, base.in, vis, out, tree, cfg); break;
    }
    benchmark::DoNotOptimize(c);
  }
  st.counters["frontier"] = static_cast<double>(base.in.popcount());
}

void layer_args(benchmark::internal::Benchmark* b) {
  b->ArgNames({"scale", "layer", "kernel"});
  for (int layer = 1; layer <= 5; ++layer) {
    for (int k = kScalarTopDown; k <= kVectorBottomUp; ++k) b->Args({18, layer, k});
  }
  b->Unit(benchmark::kMicrosecond);
}
BENCHMARK(BM_Layer)->Apply(layer_args);

void BM_Traversal(benchmark::State& st) {
  const CsrGraph& g = graph(static_cast<std::uint32_t>(st.range(0)));
  const bool simd = st.range(1) != 0;
  const vertex_t source = sample_sources(g, 1, 1)[0];
  for (auto _ : st) {
    HybridResult r = hybrid_bfs(g, source, {}, {}, simd);
    benchmark::DoNotOptimize(r.tree.parent.data());
  }
  st.counters["TEPS"] = benchmark::Counter(static_cast<double>(g.in_edges_total()),
                                           benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_Traversal)
    ->ArgNames({"scale", "simd"})
    ->Args({18, 0})
    ->Args({18, 1})
    ->Args({20, 0})
    ->Args({20, 1})
    ->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& st) {
  GraphParams p;
  p.scale = static_cast<std::uint32_t>(st.range(0));
  p.edgefactor = 16;
  for (auto _ : st) {
    EdgeList e = generate(p);
    benchmark::DoNotOptimize(e.edges.data());
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * p.num_edges()));
}
BENCHMARK(BM_Generate)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_BuildCsr(benchmark::State& st) {
  GraphParams p;
  p.scale = static_cast<std::uint32_t>(st.range(0));
  p.edgefactor = 16;
  const EdgeList e = generate(p);
  for (auto _ : st) {
    CsrGraph g = CsrGraph::build(e);
    benchmark::DoNotOptimize(g.adjacency().data());
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * p.num_edges()));
}
BENCHMARK(BM_BuildCsr)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#pragma once

// Test-only oracles and graph fixtures.  Nothing here goes through CsrGraph
// or the library's BFS code.

#include <cstdint>
#include <deque>
#include <random>
#include <vector>

#include "hbfs/generator.hpp"
#include "hbfs/types.hpp"

namespace hbfs::testing {

/// Queue BFS over adjacency lists built straight from the edge list.
inline std::vector<std::uint32_t> oracle_levels(std::uint64_t n, const std::vector<Edge>& edges,
                                                vertex_t source) {
  std::vector<std::vector<vertex_t>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<std::uint32_t> level(n, kUnreached);
  std::deque<vertex_t> queue{source};
  level[source] = 0;
  while (!queue.empty()) {
    const vertex_t u = queue.front();
    queue.pop_front();
    for (vertex_t v : adj[u]) {
      if (level[v] == kUnreached) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return level;
}

inline std::vector<Edge> path_edges(vertex_t n) {
  std::vector<Edge> e;
  for (vertex_t v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return e;
}

// Center 0, leaves 1..leaves.
inline std::vector<Edge> star_edges(vertex_t leaves) {
  std::vector<Edge> e;
  for (vertex_t v = 1; v <= leaves; ++v) e.push_back({0, v});
  return e;
}

inline std::vector<Edge> triangle_edges() { return {{0, 1}, {1, 2}, {0, 2}}; }

inline std::vector<Edge> random_edges(std::uint64_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e(m);
  for (auto& x : e) {
    x.u = static_cast<vertex_t>(rng() % n);
    x.v = static_cast<vertex_t>(rng() % n);
  }
  return e;
}

inline EdgeList kronecker(std::uint32_t scale, std::uint32_t edgefactor, std::uint64_t seed = 1) {
  GraphParams p;
  p.scale = scale;
  p.edgefactor = edgefactor;
  p.seed = seed;
  return generate(p);
}

}  // namespace hbfs::testing

#include <omp.h>

namespace hbfs::testing {

/// Pins OpenMP to `threads` workers for the guard's lifetime.
class ThreadCount {
 public:
  explicit ThreadCount(int threads) : saved_(omp_get_max_threads()) {
    omp_set_num_threads(threads);
  }
  ~ThreadCount() { omp_set_num_threads(saved_); }
  ThreadCount(const ThreadCount&) = delete;
  ThreadCount& operator=(const ThreadCount&) = delete;

 private:
  int saved_;
};

}  // namespace hbfs::testing

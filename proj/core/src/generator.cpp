#include "hbfs/generator.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hbfs {

namespace {

__extension__ using uint128 = unsigned __int128;

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kPermutationStream = 0x7065726D75746531ull;  // "permute1"

}  // namespace

void GraphParams::validate() const {
  if (scale > kMaxScale) {
    throw std::invalid_argument("scale must be at most " + std::to_string(kMaxScale));
  }
  if (edgefactor < 1) throw std::invalid_argument("edgefactor must be >= 1");
  double sum = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0) {
      throw std::invalid_argument("quadrant probabilities must be finite and non-negative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("quadrant probabilities must sum to 1");
  }
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

EdgeRng EdgeRng::for_edge(std::uint64_t seed, std::uint64_t edge_index) {
  return EdgeRng(mix64(seed) + edge_index * kGolden);
}

EdgeRng EdgeRng::for_stream(std::uint64_t seed, std::uint64_t stream_tag) {
  return EdgeRng(mix64(seed ^ mix64(stream_tag)));
}

std::uint64_t EdgeRng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double EdgeRng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t EdgeRng::next_below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection.
  uint128 m = static_cast<uint128>(next_u64()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<uint128>(next_u64()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::pair<vertex_t, vertex_t> rmat_edge(const GraphParams& params, EdgeRng& rng) {
  const double a = params.probs[0];
  const double ab = a + params.probs[1];
  const double abc = ab + params.probs[2];
  vertex_t u = 0;
  vertex_t v = 0;
  for (std::uint32_t level = params.scale; level-- > 0;) {
    const double r = rng.next_unit();
    const vertex_t bit = vertex_t{1} << level;
    if (r < a) continue;
    if (r < ab) {
      v |= bit;
    } else if (r < abc) {
      u |= bit;
    } else {
      u |= bit;
      v |= bit;
    }
  }
  return {u, v};
}

std::vector<vertex_t> vertex_permutation(std::uint64_t n, std::uint64_t seed) {
  std::vector<vertex_t> perm(n);
  std::iota(perm.begin(), perm.end(), vertex_t{0});
  EdgeRng rng = EdgeRng::for_stream(seed, kPermutationStream);
  for (std::uint64_t i = n; i > 1; --i) {
    const std::uint64_t j = rng.next_below(i);
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

EdgeList generate(const GraphParams& params) {
  params.validate();
  const std::uint64_t count = params.num_edges();
  if (count > params.memory_budget_bytes / sizeof(Edge)) {
    throw CapacityError("edge list of " + std::to_string(count) +
                        " edges exceeds the memory budget of " +
                        std::to_string(params.memory_budget_bytes) + " bytes");
  }

  EdgeList list;
  list.params = params;
  list.num_vertices = params.num_vertices();
  list.edges.resize(count);

  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    EdgeRng rng = EdgeRng::for_edge(params.seed, static_cast<std::uint64_t>(i));
    auto [u, v] = rmat_edge(params, rng);
    list.edges[i] = Edge{u, v};
  }

  if (params.permute_vertices && list.num_vertices > 1) {
    const auto perm = vertex_permutation(list.num_vertices, params.seed);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      Edge& e = list.edges[i];
      e = Edge{perm[e.u], perm[e.v]};
    }
  }
  return list;
}

}  // namespace hbfs

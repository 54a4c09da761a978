#pragma once

// Unchecked bitmap access for the layer kernels.

#include <atomic>
#include <cstdint>

#include "hbfs/frontier.hpp"

namespace hbfs::detail {

inline bool has_bit(const Bitmap& b, std::uint64_t v) {
  return (b.word(v >> 5) >> (v & 0x1F)) & 1u;
}

// Atomically sets bit v; true if this call flipped it.
inline bool claim_bit(Bitmap& b, std::uint64_t v) {
  const std::uint32_t bit = 1u << (v & 0x1F);
  return (std::atomic_ref<std::uint32_t>(b.words()[v >> 5])
              .fetch_or(bit, std::memory_order_relaxed) &
          bit) == 0;
}

// Bits of word w that correspond to real vertices.
inline std::uint32_t valid_bits(std::uint64_t n, std::size_t w) {
  const std::uint64_t first = std::uint64_t{w} * 32;
  if (first + 32 <= n) return 0xFFFFFFFFu;
  if (first >= n) return 0;
  return (1u << (n - first)) - 1u;
}

inline std::uint64_t saturating_sub(std::uint64_t a, std::uint64_t b) {
  return a > b ? a - b : 0;
}

}  // namespace hbfs::detail

#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "hbfs/types.hpp"

namespace hbfs {

/// Packed bit set over vertices.  Bit v lives in word v >> 5 at position
/// v & 0x1F.  Padding bits past `size()` are always zero.
///
/// All mutation goes through atomic word-OR, so concurrent setters of distinct
/// bits in one word never lose updates.  Reads are relaxed; a reader inside a
/// layer may see a partially updated word.
class Bitmap {
 public:
  static constexpr unsigned kWordBits = 32;

  Bitmap() = default;
  explicit Bitmap(std::uint64_t n) : n_(n), words_((n + kWordBits - 1) / kWordBits, 0u) {}

  std::uint64_t size() const { return n_; }
  std::size_t word_count() const { return words_.size(); }

  bool test(std::uint64_t v) const;
  void set_atomic(std::uint64_t v);
  /// Sets bit v and returns its previous value.
  bool test_and_set(std::uint64_t v);

  std::uint16_t get_half(std::size_t word_index, unsigned half) const;
  void or_half(std::size_t word_index, unsigned half, std::uint16_t bits);

  std::uint32_t word(std::size_t i) const {
    return std::atomic_ref<const std::uint32_t>(words_[i]).load(std::memory_order_relaxed);
  }
  void or_word(std::size_t i, std::uint32_t bits) {
    std::atomic_ref<std::uint32_t>(words_[i]).fetch_or(bits, std::memory_order_relaxed);
  }

  // Raw storage, for gathers.
  std::span<const std::uint32_t> words() const { return words_; }
  std::span<std::uint32_t> words() { return words_; }

  std::uint64_t popcount() const;
  void clear();
  void swap(Bitmap& other) noexcept {
    std::swap(n_, other.n_);
    words_.swap(other.words_);
  }

  friend bool operator==(const Bitmap&, const Bitmap&) = default;

 private:
  void check(std::uint64_t v) const;
  void check_word(std::size_t word_index, unsigned half) const;

  std::uint64_t n_ = 0;
  std::vector<std::uint32_t> words_;
};

/// Predecessor array.  parent[v] == kNil means v was never visited.
struct BfsTree {
  std::vector<vertex_t> parent;
  vertex_t source = kNil;

  BfsTree() = default;
  BfsTree(std::uint64_t n, vertex_t src) : parent(n, kNil), source(src) {
    if (src < n) parent[src] = src;
  }
};

/// Per-layer counters.  v_f and e_f describe the vertices a layer added to
/// the output queue; e_u is the edge-denominated unvisited count after the
/// layer.  `fallbacks` and `gathers` are software counters of the vector
/// kernels and stay zero for scalar kernels: `fallbacks` counts vertices
/// handed to the scalar search, `gathers` counts 2 per bottom-up probe with
/// an active lane and 1 per top-down chunk.
struct LayerCounters {
  std::uint64_t e_f = 0;
  std::uint64_t v_f = 0;
  std::uint64_t e_u = 0;
  std::uint64_t fallbacks = 0;
  std::uint64_t gathers = 0;
};

}  // namespace hbfs

#include "hbfs/frontier.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hbfs {

void Bitmap::check(std::uint64_t v) const {
  if (v >= n_) {
    throw std::out_of_range("bitmap index " + std::to_string(v) + " >= " + std::to_string(n_));
  }
}

void Bitmap::check_word(std::size_t word_index, unsigned half) const {
  if (word_index >= words_.size() || half > 1) {
    throw std::out_of_range("bitmap half-word (" + std::to_string(word_index) + ", " +
                            std::to_string(half) + ") out of range");
  }
}

bool Bitmap::test(std::uint64_t v) const {
  check(v);
  return (word(v >> 5) >> (v & 0x1F)) & 1u;
}

void Bitmap::set_atomic(std::uint64_t v) {
  check(v);
  or_word(v >> 5, 1u << (v & 0x1F));
}

bool Bitmap::test_and_set(std::uint64_t v) {
  check(v);
  const std::uint32_t bit = 1u << (v & 0x1F);
  const std::uint32_t prev =
      std::atomic_ref<std::uint32_t>(words_[v >> 5]).fetch_or(bit, std::memory_order_relaxed);
  return (prev & bit) != 0;
}

std::uint16_t Bitmap::get_half(std::size_t word_index, unsigned half) const {
  check_word(word_index, half);
  return static_cast<std::uint16_t>((word(word_index) >> (half * 16)) & 0xFFFF);
}

void Bitmap::or_half(std::size_t word_index, unsigned half, std::uint16_t bits) {
  check_word(word_index, half);
  std::uint32_t shifted = static_cast<std::uint32_t>(bits) << (half * 16);
  // Keep the padding bits past n at zero.
  if (word_index + 1 == words_.size() && (n_ & 0x1F) != 0) {
    shifted &= (1u << (n_ & 0x1F)) - 1u;
  }
  or_word(word_index, shifted);
}

std::uint64_t Bitmap::popcount() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) total += std::popcount(word(i));
  return total;
}

void Bitmap::clear() { std::fill(words_.begin(), words_.end(), 0u); }

}  // namespace hbfs

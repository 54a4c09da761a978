#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace hbfs::simd {

inline constexpr int kLanes = 16;

/// 16-bit lane mask; bit i governs lane i.
class LaneMask {
 public:
  constexpr LaneMask() = default;
  constexpr explicit LaneMask(std::uint16_t bits) : bits_(bits) {}

  static constexpr LaneMask all() { return LaneMask(0xFFFF); }
  static constexpr LaneMask none() { return LaneMask(0); }
  // Low `count` lanes set, count in [0, 16].
  static constexpr LaneMask first(unsigned count) {
    return LaneMask(count >= 16 ? std::uint16_t{0xFFFF}
                                : static_cast<std::uint16_t>((1u << count) - 1u));
  }

  constexpr std::uint16_t bits() const { return bits_; }
  constexpr bool test(int lane) const { return (bits_ >> lane) & 1u; }
  constexpr bool any() const { return bits_ != 0; }
  constexpr bool none_set() const { return bits_ == 0; }
  int count() const;

  constexpr LaneMask operator~() const { return LaneMask(static_cast<std::uint16_t>(~bits_)); }
  constexpr LaneMask operator&(LaneMask o) const { return LaneMask(bits_ & o.bits_); }
  constexpr LaneMask operator|(LaneMask o) const { return LaneMask(bits_ | o.bits_); }
  constexpr LaneMask& operator|=(LaneMask o) { bits_ |= o.bits_; return *this; }
  constexpr LaneMask& operator&=(LaneMask o) { bits_ &= o.bits_; return *this; }
  friend constexpr bool operator==(LaneMask, LaneMask) = default;

 private:
  std::uint16_t bits_ = 0;
};

/// Sixteen 32-bit lanes.
class LaneVector {
 public:
  constexpr LaneVector() = default;

  static constexpr LaneVector broadcast(std::uint32_t x) {
    LaneVector r;
    for (auto& l : r.lanes_) l = x;
    return r;
  }
  // Lane i = first + i.
  static constexpr LaneVector iota(std::uint32_t first) {
    LaneVector r;
    for (int i = 0; i < kLanes; ++i) r.lanes_[i] = first + static_cast<std::uint32_t>(i);
    return r;
  }
  static LaneVector load(std::span<const std::uint32_t, kLanes> src);

  constexpr std::uint32_t operator[](int lane) const { return lanes_[lane]; }
  constexpr void set(int lane, std::uint32_t x) { lanes_[lane] = x; }
  void store(std::span<std::uint32_t, kLanes> dst) const;

  friend constexpr bool operator==(const LaneVector&, const LaneVector&) = default;

 private:
  std::array<std::uint32_t, kLanes> lanes_{};
};

enum class Backend { hardware_simd, scalar_emulation };

/// True when this build carries AVX-512 kernels and the CPU can run them.
bool hardware_simd_available();

/// The backend that will actually execute: hardware_simd degrades to
/// scalar_emulation when unavailable.
Backend effective_backend(Backend requested);

const char* backend_name(Backend b);

/// Active lanes read base[idx]; inactive lanes hold `fill`.  Active indices
/// must be in bounds (asserted in debug builds).
LaneVector masked_gather(Backend backend, std::span<const std::uint32_t> base,
                         const LaneVector& idx, LaneMask m, std::uint32_t fill);

/// base[idx] = vals for active lanes.  Duplicate active indices resolve to
/// the highest such lane on both backends.
void masked_scatter(Backend backend, std::span<std::uint32_t> base,
                    const LaneVector& idx, const LaneVector& vals, LaneMask m);

/// The 16 vertex ids covered by one half of a 32-bit bitmap word.
constexpr LaneVector load_vertices(std::size_t word_index, unsigned half) {
  return LaneVector::iota(static_cast<std::uint32_t>(word_index * 32 + half * 16));
}

}  // namespace hbfs::simd

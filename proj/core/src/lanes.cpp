#include "hbfs/lanes.hpp"

#include <bit>
#include <cassert>

#include "avx512_backend.hpp"

namespace hbfs::simd {

int LaneMask::count() const { return std::popcount(bits_); }

LaneVector LaneVector::load(std::span<const std::uint32_t, kLanes> src) {
  LaneVector r;
  for (int i = 0; i < kLanes; ++i) r.lanes_[i] = src[i];
  return r;
}

void LaneVector::store(std::span<std::uint32_t, kLanes> dst) const {
  for (int i = 0; i < kLanes; ++i) dst[i] = lanes_[i];
}

bool hardware_simd_available() {
  static const bool available = avx512::compiled_in() && avx512::cpu_supported();
  return available;
}

Backend effective_backend(Backend requested) {
  if (requested == Backend::hardware_simd && !hardware_simd_available()) {
    return Backend::scalar_emulation;
  }
  return requested;
}

const char* backend_name(Backend b) {
  return b == Backend::hardware_simd ? "simd" : "emulate";
}

LaneVector masked_gather(Backend backend, std::span<const std::uint32_t> base,
                         const LaneVector& idx, LaneMask m, std::uint32_t fill) {
  if (effective_backend(backend) == Backend::hardware_simd) {
    return avx512::masked_gather(base, idx, m, fill);
  }
  LaneVector r = LaneVector::broadcast(fill);
  for (int i = 0; i < kLanes; ++i) {
    if (!m.test(i)) continue;
    assert(idx[i] < base.size());
    r.set(i, base[idx[i]]);
  }
  return r;
}

void masked_scatter(Backend backend, std::span<std::uint32_t> base, const LaneVector& idx,
                    const LaneVector& vals, LaneMask m) {
  if (effective_backend(backend) == Backend::hardware_simd) {
    avx512::masked_scatter(base, idx, vals, m);
    return;
  }
  // Ascending lane order: on duplicate indices the highest lane wins, the
  // same ordering the hardware scatter guarantees.
  for (int i = 0; i < kLanes; ++i) {
    if (!m.test(i)) continue;
    assert(idx[i] < base.size());
    base[idx[i]] = vals[i];
  }
}

}  // namespace hbfs::simd

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hbfs {

// Vertex ids are 32-bit so that 16 of them fill one 512-bit lane vector.
using vertex_t = std::uint32_t;
// Offsets into the adjacency array are 64-bit.
using offset_t = std::uint64_t;

inline constexpr vertex_t kNil = std::numeric_limits<vertex_t>::max();
inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Largest supported scale: ids must stay below kNil and fit a signed 32-bit
// gather index.
inline constexpr std::uint32_t kMaxScale = 31;

// Raised when a size would exceed a configured budget or an index type.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace hbfs

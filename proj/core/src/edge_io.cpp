#include <array>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hbfs/generator.hpp"

namespace hbfs {

namespace {

constexpr std::array<char, 8> kMagic{'H', 'B', 'F', 'S', 'E', 'D', 'G', '1'};

template <typename T>
void put_le(std::ostream& os, T value) {
  std::array<char, sizeof(T)> bytes;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xFF);
  }
  os.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& is) {
  std::array<unsigned char, sizeof(T)> bytes;
  if (!is.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw std::runtime_error("edge list: unexpected end of input");
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  }
  return static_cast<T>(value);
}

}  // namespace

void write_edge_list(std::ostream& os, const EdgeList& list) {
  os.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(os, list.params.scale);
  put_le<std::uint32_t>(os, list.params.edgefactor);
  put_le<std::uint64_t>(os, list.params.seed);
  put_le<std::uint64_t>(os, list.edges.size());
  for (const Edge& e : list.edges) {
    put_le<std::uint64_t>(os, e.u);
    put_le<std::uint64_t>(os, e.v);
  }
  if (!os) throw std::runtime_error("edge list: write failed");
}

EdgeList read_edge_list(std::istream& is) {
  std::array<char, 8> magic{};
  if (!is.read(magic.data(), magic.size()) || magic != kMagic) {
    throw std::runtime_error("edge list: bad magic");
  }
  EdgeList list;
  list.params.scale = get_le<std::uint32_t>(is);
  list.params.edgefactor = get_le<std::uint32_t>(is);
  list.params.seed = get_le<std::uint64_t>(is);
  if (list.params.scale > kMaxScale) {
    throw std::runtime_error("edge list: scale " + std::to_string(list.params.scale) +
                             " out of range");
  }
  list.num_vertices = list.params.num_vertices();
  const auto count = get_le<std::uint64_t>(is);
  if (count > list.params.memory_budget_bytes / sizeof(Edge)) {
    throw CapacityError("edge list: " + std::to_string(count) + " edges exceed the memory budget");
  }
  list.edges.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto u = get_le<std::uint64_t>(is);
    const auto v = get_le<std::uint64_t>(is);
    if (u >= list.num_vertices || v >= list.num_vertices) {
      throw std::runtime_error("edge list: endpoint out of range at edge " + std::to_string(i));
    }
    list.edges.push_back(Edge{static_cast<vertex_t>(u), static_cast<vertex_t>(v)});
  }
  return list;
}

}  // namespace hbfs

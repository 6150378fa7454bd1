#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "gre/error.hpp"

// Little-endian helpers shared by every binary format in the project.
namespace gre::detail {

static_assert(std::endian::native == std::endian::little,
              "binary formats are little-endian; big-endian hosts need byte swapping");

template <class T>
  requires std::is_trivially_copyable_v<T>
inline void store(std::byte* dst, const T& value) noexcept {
  std::memcpy(dst, &value, sizeof(T));
}

template <class T>
  requires std::is_trivially_copyable_v<T>
inline T load(const std::byte* src) noexcept {
  T value;
  std::memcpy(&value, src, sizeof(T));
  return value;
}

template <class T>
  requires std::is_trivially_copyable_v<T>
inline void write_pod(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <class T>
  requires std::is_trivially_copyable_v<T>
inline T read_pod(std::istream& in) {
  T value;
  if (!in.read(reinterpret_cast<char*>(&value), sizeof(T))) {
    throw FormatError("unexpected end of binary stream");
  }
  return value;
}

// Section = u64 byte length followed by the raw items.
template <class T>
  requires std::is_trivially_copyable_v<T>
inline void write_section(std::ostream& out, std::span<const T> items) {
  write_pod<std::uint64_t>(out, items.size_bytes());
  out.write(reinterpret_cast<const char*>(items.data()),
            static_cast<std::streamsize>(items.size_bytes()));
}

template <class T>
  requires std::is_trivially_copyable_v<T>
inline std::vector<T> read_section(std::istream& in, const char* what) {
  const auto bytes = read_pod<std::uint64_t>(in);
  if (bytes % sizeof(T) != 0) {
    throw FormatError(std::string("section '") + what + "' has a length that is not a multiple of " +
                      std::to_string(sizeof(T)));
  }
  std::vector<T> items(bytes / sizeof(T));
  if (!in.read(reinterpret_cast<char*>(items.data()), static_cast<std::streamsize>(bytes))) {
    throw FormatError(std::string("section '") + what + "' is truncated");
  }
  return items;
}

}  // namespace gre::detail

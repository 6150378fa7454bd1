#pragma once

#include <cstdint>

namespace gre {

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used as a counter-based
// generator: the value drawn for counter c under key k is mix64(k ^ mix64(c)),
// so any element of a stream can be computed independently of the others.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t counter_draw(std::uint64_t key, std::uint64_t counter) noexcept {
  return mix64(key ^ mix64(counter));
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, range) by 128-bit multiply (Lemire's reduction).
inline std::uint64_t to_range(std::uint64_t bits, std::uint64_t range) noexcept {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<u128>(bits) * range) >> 64);
}

}  // namespace gre

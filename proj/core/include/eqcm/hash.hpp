#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace eqcm {

/// 64-bit FNV-1a. Used for observable-family fingerprints and artifact
/// file hashes; stable across platforms and runs.
constexpr std::uint64_t fnv1a64(std::string_view data,
                                std::uint64_t seed = 0xcbf29ce484222325ull) {
  std::uint64_t h = seed;
  for (char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string to_hex(std::uint64_t value);
std::uint64_t from_hex(std::string_view hex);

}  // namespace eqcm

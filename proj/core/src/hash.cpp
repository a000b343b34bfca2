#include "eqcm/hash.hpp"

#include <charconv>
#include <stdexcept>

namespace eqcm {

std::string to_hex(std::uint64_t value) {
  char buf[17] = {};
  for (int i = 15; i >= 0; --i) {
    buf[i] = "0123456789abcdef"[value & 0xF];
    value >>= 4;
  }
  return std::string(buf, 16);
}

std::uint64_t from_hex(std::string_view hex) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), value, 16);
  if (ec != std::errc{} || ptr != hex.data() + hex.size()) {
    throw std::invalid_argument("invalid hex string: " + std::string(hex));
  }
  return value;
}

}  // namespace eqcm

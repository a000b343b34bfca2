#include "eqcm/text.hpp"

#include <array>
#include <stdexcept>

namespace eqcm {

namespace {

[[noreturn]] void bad_utf8(std::size_t pos) {
  throw std::invalid_argument("malformed UTF-8 at byte offset " + std::to_string(pos));
}

}  // namespace

std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto b0 = static_cast<unsigned char>(bytes[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      bad_utf8(i);
    }
    if (i + len > bytes.size()) bad_utf8(i);
    for (std::size_t k = 1; k < len; ++k) {
      const auto bk = static_cast<unsigned char>(bytes[i + k]);
      if ((bk & 0xC0) != 0x80) bad_utf8(i + k);
      cp = (cp << 6) | (bk & 0x3F);
    }
    static constexpr std::array<char32_t, 5> min_cp = {0, 0, 0x80, 0x800, 0x10000};
    if (len > 1 && cp < min_cp[len]) bad_utf8(i);  // overlong encoding
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) bad_utf8(i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) out += encode_utf8(cp);
  return out;
}

std::u32string compose_accents(std::u32string text) {
  constexpr char32_t kGrave = 0x0300;
  constexpr char32_t kAcute = 0x0301;
  auto composed = [](char32_t base, char32_t mark) -> char32_t {
    const bool acute = (mark == 0x0301);
    switch (base) {
      case U'a': return acute ? U'á' : U'à';
      case U'e': return acute ? U'é' : U'è';
      case U'i': return acute ? U'í' : U'ì';
      case U'o': return acute ? U'ó' : U'ò';
      case U'u': return acute ? U'ú' : U'ù';
      case U'A': return acute ? U'Á' : U'À';
      case U'E': return acute ? U'É' : U'È';
      case U'I': return acute ? U'Í' : U'Ì';
      case U'O': return acute ? U'Ó' : U'Ò';
      case U'U': return acute ? U'Ú' : U'Ù';
      default: return 0;
    }
  };
  std::u32string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if ((cp == kGrave || cp == kAcute) && !out.empty()) {
      if (char32_t c = composed(out.back(), cp); c != 0) {
        out.back() = c;
        continue;
      }
    }
    out.push_back(cp);
  }
  return out;
}

bool is_lowercase(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return true;
  // Latin-1 supplement lowercase block, splitting around the multiply
  // (U+00F7) and micro signs.
  if (cp == 0x00B5 || cp == 0x00DF) return true;
  if (cp >= 0x00E0 && cp <= 0x00F6) return true;
  if (cp >= 0x00F8 && cp <= 0x00FF) return true;
  return false;
}

}  // namespace eqcm

#include "eqcm/alphabet.hpp"

#include <stdexcept>

#include "eqcm/text.hpp"

namespace eqcm {

Alphabet::Alphabet(std::u32string symbols) : symbols_(std::move(symbols)) {
  index_.reserve(symbols_.size());
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto [it, inserted] = index_.emplace(symbols_[i], static_cast<int>(i));
    if (!inserted) {
      throw std::invalid_argument("duplicate alphabet symbol: " + encode_utf8(symbols_[i]));
    }
  }
}

int Alphabet::index_of(char32_t cp) const {
  auto it = index_.find(cp);
  return it == index_.end() ? -1 : it->second;
}

const Alphabet& Alphabet::italian() {
  static const Alphabet a(U"aàbcdeèéfghiìjklmnoòpqrstuùvwxyz");
  return a;
}

const Alphabet& Alphabet::latin26() {
  static const Alphabet a(U"abcdefghijklmnopqrstuvwxyz");
  return a;
}

const std::u32string& italian_vowels() {
  static const std::u32string v = U"aàeèéiìoòuùjw";
  return v;
}

}  // namespace eqcm

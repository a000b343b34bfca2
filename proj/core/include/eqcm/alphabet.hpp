#pragma once

#include <string>
#include <unordered_map>

namespace eqcm {

/// Ordered set of distinct symbols (code points). The order is
/// significant: frequency ties during bin fitting are broken by it.
class Alphabet {
 public:
  explicit Alphabet(std::u32string symbols);

  /// 32-symbol alphabet for the Italian tasks: the lowercase Latin
  /// letters with the accented vowels interleaved after their bases.
  static const Alphabet& italian();

  /// Plain lowercase a-z.
  static const Alphabet& latin26();

  bool contains(char32_t cp) const { return index_.count(cp) != 0; }
  /// Position in the alphabet order, or -1 when absent.
  int index_of(char32_t cp) const;
  std::size_t size() const { return symbols_.size(); }
  const std::u32string& symbols() const { return symbols_; }

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::u32string symbols_;
  std::unordered_map<char32_t, int> index_;
};

/// Vowel set for the consonant-vowel encoding: plain and accented
/// vowels plus the semivowels j and w.
const std::u32string& italian_vowels();

}  // namespace eqcm

#pragma once

#include <string>
#include <string_view>

namespace eqcm {

/// Decodes UTF-8 into code points. Throws std::invalid_argument on
/// malformed input (overlong forms, truncated sequences, surrogates).
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t cp);

/// Minimal canonical composition: folds combining grave (U+0300) and
/// acute (U+0301) marks onto a/e/i/o/u bases into the precomposed
/// Latin-1 letters. Marks on other bases are left untouched and will be
/// rejected later by the alphabet filter.
std::u32string compose_accents(std::u32string text);

/// Lowercase-letter test covering ASCII and the Latin-1 supplement,
/// which is the full range the bundled alphabets can produce.
bool is_lowercase(char32_t cp);

}  // namespace eqcm

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace tweetkit::uni {

// Decodes UTF-8 to code points. Invalid byte sequences become U+FFFD,
// one replacement per rejected byte.
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view codepoints);

std::size_t codepoint_length(std::string_view text);

// Extended_Pictographic per the vendored Unicode 14.0 property table.
bool is_extended_pictographic(char32_t cp);

// U+1F1E6..U+1F1FF
bool is_regional_indicator(char32_t cp);

// U+1F3FB..U+1F3FF (Fitzpatrick skin tones)
bool is_skin_tone_modifier(char32_t cp);

inline constexpr char32_t kZeroWidthJoiner = U'‍';
inline constexpr char32_t kVariationSelector16 = U'️';
inline constexpr char32_t kCombiningEnclosingKeycap = U'⃣';

// ASCII whitespace; the definition used for URL chunking and for the
// whitespace collapsing done by entity removal.
inline bool is_space(char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
           cp == U'\f' || cp == U'\v';
}

}  // namespace tweetkit::uni

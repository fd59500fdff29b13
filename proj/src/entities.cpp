#include "tweetkit/entities.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "tweetkit/unicode.hpp"

namespace tweetkit {

namespace {

using uni::is_space;

bool is_handle_char(char32_t cp) {
    return (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z') ||
           (cp >= U'0' && cp <= U'9') || cp == U'_';
}

constexpr std::size_t kMaxHandleLength = 15;

char32_t ascii_lower(char32_t cp) {
    return (cp >= U'A' && cp <= U'Z') ? cp + (U'a' - U'A') : cp;
}

bool starts_with_ci(std::u32string_view text, std::size_t pos, std::u32string_view prefix) {
    if (pos + prefix.size() > text.size()) return false;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
        if (ascii_lower(text[pos + k]) != prefix[k]) return false;
    }
    return true;
}

bool is_url_trim_char(char32_t cp) {
    switch (cp) {
        case U'.':
        case U',':
        case U';':
        case U':':
        case U'!':
        case U'?':
        case U'\'':
        case U'"':
        case U')':
        case U']':
            return true;
        default:
            return false;
    }
}

bool is_keycap_base(char32_t cp) {
    return cp == U'#' || cp == U'*' || (cp >= U'0' && cp <= U'9');
}

bool overlaps(const EntitySpan& a, const EntitySpan& b) {
    return a.start < b.end && b.start < a.end;
}

}  // namespace

std::string_view to_string(EntityKind kind) {
    switch (kind) {
        case EntityKind::Url:
            return "url";
        case EntityKind::Mention:
            return "mention";
        case EntityKind::Emoji:
            return "emoji";
    }
    return "";
}

std::vector<EntitySpan> detect_urls(std::u32string_view text) {
    static constexpr std::array<std::u32string_view, 3> kPrefixes = {U"https://", U"http://",
                                                                     U"www."};
    std::vector<EntitySpan> spans;
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        if (is_space(text[i])) {
            ++i;
            continue;
        }
        std::size_t chunk_start = i;
        while (i < n && !is_space(text[i])) ++i;
        std::size_t chunk_end = i;

        std::size_t prefix_len = 0;
        for (const auto& prefix : kPrefixes) {
            if (starts_with_ci(text, chunk_start, prefix)) {
                prefix_len = prefix.size();
                break;
            }
        }
        if (prefix_len == 0) continue;
        while (chunk_end > chunk_start && is_url_trim_char(text[chunk_end - 1])) --chunk_end;
        // The prefix alone is not a URL.
        if (chunk_end - chunk_start > prefix_len) {
            spans.push_back({EntityKind::Url, chunk_start, chunk_end});
        }
    }
    return spans;
}

std::vector<EntitySpan> detect_mentions(std::u32string_view text) {
    std::vector<EntitySpan> spans;
    const std::size_t n = text.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (text[i] != U'@') continue;
        if (i > 0) {
            const char32_t prev = text[i - 1];
            if (is_handle_char(prev) || prev == U'@') continue;
        }
        std::size_t end = i + 1;
        while (end < n && is_handle_char(text[end])) ++end;
        const std::size_t handle_len = end - (i + 1);
        if (handle_len == 0 || handle_len > kMaxHandleLength) {
            i = end > i + 1 ? end - 1 : i;
            continue;
        }
        spans.push_back({EntityKind::Mention, i, end});
        i = end - 1;
    }
    return spans;
}

std::vector<EntitySpan> detect_emoji(std::u32string_view text) {
    std::vector<EntitySpan> spans;
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t end = 0;
        if (is_keycap_base(text[i])) {
            std::size_t j = i + 1;
            if (j < n && text[j] == uni::kVariationSelector16) ++j;
            if (j < n && text[j] == uni::kCombiningEnclosingKeycap) end = j + 1;
        } else if (uni::is_regional_indicator(text[i])) {
            if (i + 1 < n && uni::is_regional_indicator(text[i + 1])) end = i + 2;
        } else if (uni::is_extended_pictographic(text[i])) {
            end = i + 1;
        }
        if (end == 0) {
            ++i;
            continue;
        }
        // Absorb presentation selectors, skin tones and ZWJ-joined pictographs.
        for (;;) {
            if (end < n && text[end] == uni::kVariationSelector16) {
                ++end;
            } else if (end < n && uni::is_skin_tone_modifier(text[end])) {
                ++end;
            } else if (end + 1 < n && text[end] == uni::kZeroWidthJoiner &&
                       uni::is_extended_pictographic(text[end + 1])) {
                end += 2;
            } else {
                break;
            }
        }
        spans.push_back({EntityKind::Emoji, i, end});
        i = end;
    }
    return spans;
}

std::vector<EntitySpan> detect_all(std::u32string_view text) {
    std::vector<EntitySpan> accepted = detect_urls(text);
    const std::size_t url_count = accepted.size();
    for (const EntitySpan& span : detect_mentions(text)) {
        bool clash = false;
        for (std::size_t k = 0; k < url_count && !clash; ++k)
            clash = overlaps(span, accepted[k]);
        if (!clash) accepted.push_back(span);
    }
    const std::size_t url_mention_count = accepted.size();
    for (const EntitySpan& span : detect_emoji(text)) {
        bool clash = false;
        for (std::size_t k = 0; k < url_mention_count && !clash; ++k)
            clash = overlaps(span, accepted[k]);
        if (!clash) accepted.push_back(span);
    }
    std::sort(accepted.begin(), accepted.end(),
              [](const EntitySpan& a, const EntitySpan& b) { return a.start < b.start; });
    return accepted;
}

std::vector<EntitySpan> detect_urls(std::string_view text) {
    return detect_urls(std::u32string_view(uni::decode_utf8(text)));
}

std::vector<EntitySpan> detect_mentions(std::string_view text) {
    return detect_mentions(std::u32string_view(uni::decode_utf8(text)));
}

std::vector<EntitySpan> detect_emoji(std::string_view text) {
    return detect_emoji(std::u32string_view(uni::decode_utf8(text)));
}

std::vector<EntitySpan> detect_all(std::string_view text) {
    return detect_all(std::u32string_view(uni::decode_utf8(text)));
}

}  // namespace tweetkit

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace tweetkit {

enum class EntityKind { Url, Mention, Emoji };

std::string_view to_string(EntityKind kind);

// Half-open code-point range [start, end) into the source text.
struct EntitySpan {
    EntityKind kind;
    std::size_t start;
    std::size_t end;

    bool operator==(const EntitySpan&) const = default;
};

// Each detector returns spans sorted by start and pairwise disjoint.
//
// URL: a whitespace-delimited chunk starting with http://, https:// or www.
// (case-insensitive), with trailing . , ; : ! ? ' " ) ] trimmed off; the
// remainder must be longer than the prefix itself.
//
// Mention: @ followed by 1-15 characters from [A-Za-z0-9_], where the @ is
// at text start or preceded by a character outside [A-Za-z0-9_@]. A handle
// run longer than 15 characters is not a mention.
//
// Emoji: a maximal sequence built from an Extended_Pictographic code point,
// a keycap sequence ([0-9#*] U+FE0F? U+20E3) or a regional-indicator pair,
// absorbing trailing U+FE0F, skin-tone modifiers and ZWJ-joined pictographs.
std::vector<EntitySpan> detect_urls(std::u32string_view text);
std::vector<EntitySpan> detect_mentions(std::u32string_view text);
std::vector<EntitySpan> detect_emoji(std::u32string_view text);

// Union of the three detectors with overlaps resolved by precedence
// Url > Mention > Emoji; result sorted and disjoint.
std::vector<EntitySpan> detect_all(std::u32string_view text);

// UTF-8 convenience overloads; offsets are still code points.
std::vector<EntitySpan> detect_urls(std::string_view text);
std::vector<EntitySpan> detect_mentions(std::string_view text);
std::vector<EntitySpan> detect_emoji(std::string_view text);
std::vector<EntitySpan> detect_all(std::string_view text);

}  // namespace tweetkit

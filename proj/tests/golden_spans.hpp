#pragma once

// Hand-constructed detection cases. Offsets are code points, worked out by
// hand against the URL/mention/emoji grammars; each entry lists the spans
// detect_all must return, in order.

#include <string>
#include <vector>

#include "tweetkit/entities.hpp"

namespace golden {

struct Case {
    const char* text;
    std::vector<tweetkit::EntitySpan> spans;
};

inline const std::vector<Case>& cases() {
    using tweetkit::EntityKind;
    using tweetkit::EntitySpan;
    constexpr EntityKind U = EntityKind::Url;
    constexpr EntityKind M = EntityKind::Mention;
    constexpr EntityKind E = EntityKind::Emoji;

    static const std::vector<Case> list = {
        // URLs
        {"see https://t.co/9o2la81F96 now", {{U, 4, 27}}},
        {"", {}},
        {"visit www.example.com, ok", {{U, 6, 21}}},
        {"https://a.b", {{U, 0, 11}}},
        {"http://x", {{U, 0, 8}}},
        {"www.x", {{U, 0, 5}}},
        {"www.", {}},
        {"http://", {}},
        {"https://", {}},
        {"see http://.", {}},
        {"HTTPS://T.CO/ABC down", {{U, 0, 16}}},
        {"pre www.a.io!!! post", {{U, 4, 12}}},
        {"two www.a.com www.b.com", {{U, 4, 13}, {U, 14, 23}}},
        {"(www.example.com)", {}},
        {"seehttps://x.co", {}},
        {"https://t.co/x,", {{U, 0, 14}}},
        {"www.ex\U0001F44D z", {{U, 0, 7}}},
        {"x http://a'b", {{U, 2, 12}}},
        {"quote 'www.a.com'", {}},
        {"end www.a.com.", {{U, 4, 13}}},
        {"tab\thttp://a.b c", {{U, 4, 14}}},
        {"wWw.Site.com", {{U, 0, 12}}},
        {"deep www.a.co/p?q=1&r=2 x", {{U, 5, 23}}},
        // Mentions
        {"@RaeDiamond Bad ass I'm a rare blood type", {{M, 0, 11}}},
        {"email me a@b", {}},
        {"no at-signs here", {}},
        {"@a", {{M, 0, 2}}},
        {"hi @bob!", {{M, 3, 7}}},
        {"@abcdefghijklmno x", {{M, 0, 16}}},
        {"@abcdefghijklmnop x", {}},
        {"a @b c @d", {{M, 2, 4}, {M, 7, 9}}},
        {"@@bob", {}},
        {".@crew", {{M, 1, 6}}},
        {"(@paren)", {{M, 1, 7}}},
        {"x_@y", {}},
        {"9@y", {}},
        {"-@dash", {{M, 1, 6}}},
        {"@under_score9 ok", {{M, 0, 13}}},
        {"@bob@carol", {{M, 0, 4}}},
        {"rt @news: x", {{M, 3, 8}}},
        {"＠fullwidth", {}},
        {"@", {}},
        // Emoji
        {"ok \U0001F44D", {{E, 3, 4}}},
        {"family \U0001F469‍\U0001F469‍\U0001F467", {{E, 7, 12}}},
        {"plain ascii text", {}},
        {"skin \U0001F44D\U0001F3FD tone", {{E, 5, 7}}},
        {"flag \U0001F1FA\U0001F1F8 usa", {{E, 5, 7}}},
        {"half \U0001F1FA x", {}},
        {"keycap 1️⃣ done", {{E, 7, 10}}},
        {"hash #⃣", {{E, 5, 7}}},
        {"heart ❤️ red", {{E, 6, 8}}},
        {"copyright © sign", {{E, 10, 11}}},
        {"\U0001F600\U0001F601", {{E, 0, 1}, {E, 1, 2}}},
        {"pair \U0001F1E9\U0001F1EA\U0001F1FA\U0001F1F8", {{E, 5, 7}, {E, 7, 9}}},
        {"odd \U0001F1E6\U0001F1E7\U0001F1E8 tail", {{E, 4, 6}}},
        {"tech \U0001F468‍\U0001F4BB go", {{E, 5, 8}}},
        {"zwj dangling \U0001F44D‍ x", {{E, 13, 14}}},
        {"text sel ☂︎ rain", {{E, 9, 10}}},
        {"digit 7 plain", {}},
        {"modifier alone \U0001F3FD x", {}},
        {"‍ lead zwj", {}},
        {"tm ™ sign", {{E, 3, 4}}},
        // Precedence
        {"https://x.co/@user", {{U, 0, 18}}},
        {"@a \U0001F44D http://b.c", {{M, 0, 2}, {E, 3, 4}, {U, 5, 15}}},
        {"www.a.com/\U0001F600 x", {{U, 0, 11}}},
        {"mix @a www.b.co \U0001F44D end", {{M, 4, 6}, {U, 7, 15}, {E, 16, 17}}},
        {"email a@b.com www.c.io", {{U, 14, 22}}},
    };
    return list;
}

}  // namespace golden

#include "tweetkit/transform.hpp"

#include <stdexcept>

#include "tweetkit/unicode.hpp"

namespace tweetkit {

namespace {

std::u32string_view placeholder32(EntityKind kind) {
    switch (kind) {
        case EntityKind::Url:
            return U"$URL$";
        case EntityKind::Mention:
            return U"$MENTION$";
        case EntityKind::Emoji:
            return U"$EMOJI$";
    }
    return U"";
}

std::u32string collapse_whitespace(std::u32string_view text) {
    std::u32string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char32_t cp : text) {
        if (uni::is_space(cp)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(U' ');
            pending_space = false;
            out.push_back(cp);
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(TechniqueMode mode) {
    return mode == TechniqueMode::Tokenize ? "tokenize" : "remove";
}

Pipeline::Pipeline(std::vector<Technique> steps) : steps_(std::move(steps)) {
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        for (std::size_t j = i + 1; j < steps_.size(); ++j) {
            if (steps_[i].kind == steps_[j].kind) {
                throw std::invalid_argument(
                    "pipeline has more than one technique for entity kind '" +
                    std::string(to_string(steps_[i].kind)) + "'");
            }
        }
    }
}

std::optional<TechniqueMode> Pipeline::mode_for(EntityKind kind) const {
    for (const Technique& step : steps_) {
        if (step.kind == kind) return step.mode;
    }
    return std::nullopt;
}

std::string_view placeholder(EntityKind kind) {
    switch (kind) {
        case EntityKind::Url:
            return "$URL$";
        case EntityKind::Mention:
            return "$MENTION$";
        case EntityKind::Emoji:
            return "$EMOJI$";
    }
    return "";
}

std::string apply_pipeline(std::string_view text, const Pipeline& pipeline) {
    if (pipeline.empty()) return std::string(text);

    const std::u32string cps = uni::decode_utf8(text);
    bool any_remove = false;
    for (const Technique& step : pipeline.steps()) {
        any_remove = any_remove || step.mode == TechniqueMode::Remove;
    }

    std::u32string out;
    out.reserve(cps.size());
    std::size_t pos = 0;
    for (const EntitySpan& span : detect_all(std::u32string_view(cps))) {
        const std::optional<TechniqueMode> mode = pipeline.mode_for(span.kind);
        if (!mode) continue;
        out.append(cps, pos, span.start - pos);
        if (*mode == TechniqueMode::Tokenize) out.append(placeholder32(span.kind));
        pos = span.end;
    }
    out.append(cps, pos, cps.size() - pos);

    if (any_remove) out = collapse_whitespace(out);
    return uni::encode_utf8(out);
}

std::string apply_technique(std::string_view text, Technique technique) {
    return apply_pipeline(text, Pipeline({technique}));
}

}  // namespace tweetkit

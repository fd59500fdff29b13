#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tweetkit/entities.hpp"

namespace tweetkit {

enum class TechniqueMode { Tokenize, Remove };

std::string_view to_string(TechniqueMode mode);

struct Technique {
    EntityKind kind;
    TechniqueMode mode;

    bool operator==(const Technique&) const = default;
};

// Ordered list of techniques, at most one per entity kind.
class Pipeline {
public:
    Pipeline() = default;
    // Throws std::invalid_argument on a duplicate entity kind.
    explicit Pipeline(std::vector<Technique> steps);

    const std::vector<Technique>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    std::optional<TechniqueMode> mode_for(EntityKind kind) const;

    bool operator==(const Pipeline&) const = default;

private:
    std::vector<Technique> steps_;
};

// "$URL$", "$MENTION$" or "$EMOJI$".
std::string_view placeholder(EntityKind kind);

// Spans are detected once on the original text (detect_all precedence) and
// rewritten in a single left-to-right pass, so placeholders inserted by one
// step are never re-matched by another. Tokenize replaces each span of the
// technique's kind with its placeholder; Remove deletes it. If any step
// removes, whitespace runs in the result are collapsed to one space and the
// ends are trimmed.
std::string apply_technique(std::string_view text, Technique technique);
std::string apply_pipeline(std::string_view text, const Pipeline& pipeline);

}  // namespace tweetkit

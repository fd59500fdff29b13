#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tweetkit {

enum class Label { Negative = 0, Positive = 1 };

struct Tweet {
    std::string id;
    std::string text;
    std::optional<Label> label;

    bool operator==(const Tweet&) const = default;
};

struct CorpusStats {
    std::size_t n = 0;
    std::size_t n_positive = 0;
    double pct_positive = 0.0;  // over the labeled subset
    std::size_t len_min = 0;    // code points
    std::size_t len_max = 0;
    double len_mean = 0.0;
    double len_std = 0.0;  // sample (n-1), 0 when n == 1
    double pct_url = 0.0;  // % of tweets with at least one span of the kind
    double pct_emoji = 0.0;
    double pct_mention = 0.0;
};

// Corpus TSV: UTF-8, header line `tweet_id<TAB>text[<TAB>label]`, one row
// per tweet. Tabs, newlines, carriage returns and backslashes embedded in
// the text column are escaped as \t, \n, \r, \\. Labels are 0 or 1.
//
// load_corpus requires the label column when has_labels is true and ignores
// it otherwise. Malformed rows, duplicate ids and unparseable labels throw
// std::runtime_error naming the offending line.
std::vector<Tweet> load_corpus(std::istream& in, bool has_labels);
std::vector<Tweet> load_corpus(const std::filesystem::path& path, bool has_labels);

struct LoadedCorpus {
    std::vector<Tweet> tweets;
    bool has_labels = false;
};

// Like load_corpus, but takes the label column's presence from the header.
LoadedCorpus load_corpus_auto(std::istream& in);
LoadedCorpus load_corpus_auto(const std::filesystem::path& path);

// Writes the label column iff with_labels; throws if a tweet lacks a label.
void save_corpus(std::ostream& out, const std::vector<Tweet>& corpus, bool with_labels);
void save_corpus(const std::filesystem::path& path, const std::vector<Tweet>& corpus,
                 bool with_labels);

// Throws std::invalid_argument on an empty corpus.
CorpusStats compute_stats(const std::vector<Tweet>& corpus);

// key: value lines; counts as integers, percentages and mean/std at two
// decimals.
std::string format_stats(const CorpusStats& stats);

}  // namespace tweetkit

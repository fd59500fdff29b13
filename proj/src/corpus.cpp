#include "tweetkit/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "tweetkit/entities.hpp"
#include "tweetkit/unicode.hpp"

namespace tweetkit {

namespace {

std::string escape_field(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '\\':
                out += "\\\\";
                break;
            case '\t':
                out += "\\t";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\r':
                out += "\\r";
                break;
            default:
                out.push_back(c);
        }
    }
    return out;
}

std::string unescape_field(std::string_view text, std::size_t line_no) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '\\') {
            out.push_back(text[i]);
            continue;
        }
        if (i + 1 >= text.size()) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": dangling backslash in text field");
        }
        switch (text[++i]) {
            case '\\':
                out.push_back('\\');
                break;
            case 't':
                out.push_back('\t');
                break;
            case 'n':
                out.push_back('\n');
                break;
            case 'r':
                out.push_back('\r');
                break;
            default:
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": unknown escape '\\" + std::string(1, text[i]) +
                                         "' in text field");
        }
    }
    return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

Label parse_label(const std::string& value, std::size_t line_no) {
    if (value == "0") return Label::Negative;
    if (value == "1") return Label::Positive;
    throw std::runtime_error("line " + std::to_string(line_no) + ": invalid label '" + value +
                             "' (expected 0 or 1)");
}

enum class LabelMode { Auto, Required, Ignored };

LoadedCorpus load_corpus_impl(std::istream& in, LabelMode mode) {
    std::string line;
    if (!read_line(in, line)) throw std::runtime_error("line 1: missing header");
    const std::vector<std::string> header = split_tabs(line);
    const bool header_has_label = header.size() == 3 && header[2] == "label";
    const bool header_ok =
        header.size() >= 2 && header[0] == "tweet_id" && header[1] == "text" &&
        (header.size() == 2 || header_has_label);
    if (!header_ok) {
        throw std::runtime_error(
            "line 1: malformed header (expected tweet_id<TAB>text[<TAB>label])");
    }
    if (mode == LabelMode::Required && !header_has_label) {
        throw std::runtime_error("line 1: corpus has no label column");
    }
    const bool parse_labels =
        header_has_label && (mode == LabelMode::Required || mode == LabelMode::Auto);

    LoadedCorpus result;
    result.has_labels = parse_labels;
    std::unordered_set<std::string> seen_ids;
    std::size_t line_no = 1;
    while (read_line(in, line)) {
        ++line_no;
        const std::vector<std::string> fields = split_tabs(line);
        if (fields.size() != header.size()) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(header.size()) + " columns, got " +
                                     std::to_string(fields.size()));
        }
        Tweet tweet;
        tweet.id = fields[0];
        if (tweet.id.empty()) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": empty tweet id");
        }
        if (!seen_ids.insert(tweet.id).second) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": duplicate tweet id '" + tweet.id + "'");
        }
        tweet.text = unescape_field(fields[1], line_no);
        if (parse_labels) tweet.label = parse_label(fields[2], line_no);
        result.tweets.push_back(std::move(tweet));
    }
    return result;
}

std::string fmt2(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

}  // namespace

std::vector<Tweet> load_corpus(std::istream& in, bool has_labels) {
    return load_corpus_impl(in, has_labels ? LabelMode::Required : LabelMode::Ignored).tweets;
}

std::vector<Tweet> load_corpus(const std::filesystem::path& path, bool has_labels) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path.string());
    return load_corpus(in, has_labels);
}

LoadedCorpus load_corpus_auto(std::istream& in) { return load_corpus_impl(in, LabelMode::Auto); }

LoadedCorpus load_corpus_auto(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path.string());
    return load_corpus_auto(in);
}

void save_corpus(std::ostream& out, const std::vector<Tweet>& corpus, bool with_labels) {
    out << "tweet_id\ttext";
    if (with_labels) out << "\tlabel";
    out << '\n';
    for (const Tweet& tweet : corpus) {
        if (tweet.id.find_first_of("\t\n\r") != std::string::npos) {
            throw std::runtime_error("tweet id '" + tweet.id + "' contains a tab or newline");
        }
        out << tweet.id << '\t' << escape_field(tweet.text);
        if (with_labels) {
            if (!tweet.label) {
                throw std::runtime_error("tweet '" + tweet.id +
                                         "' has no label but a label column was requested");
            }
            out << '\t' << (*tweet.label == Label::Positive ? '1' : '0');
        }
        out << '\n';
    }
}

void save_corpus(const std::filesystem::path& path, const std::vector<Tweet>& corpus,
                 bool with_labels) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write corpus file: " + path.string());
    save_corpus(out, corpus, with_labels);
    if (!out.flush()) throw std::runtime_error("write failure: " + path.string());
}

CorpusStats compute_stats(const std::vector<Tweet>& corpus) {
    if (corpus.empty()) {
        throw std::invalid_argument("cannot compute statistics of an empty corpus");
    }
    CorpusStats stats;
    stats.n = corpus.size();

    std::size_t n_labeled = 0;
    std::size_t with_url = 0, with_emoji = 0, with_mention = 0;
    std::vector<std::size_t> lengths;
    lengths.reserve(corpus.size());
    for (const Tweet& tweet : corpus) {
        const std::u32string cps = uni::decode_utf8(tweet.text);
        lengths.push_back(cps.size());
        if (tweet.label) {
            ++n_labeled;
            if (*tweet.label == Label::Positive) ++stats.n_positive;
        }
        const std::u32string_view view(cps);
        if (!detect_urls(view).empty()) ++with_url;
        if (!detect_emoji(view).empty()) ++with_emoji;
        if (!detect_mentions(view).empty()) ++with_mention;
    }

    stats.pct_positive =
        n_labeled > 0 ? 100.0 * static_cast<double>(stats.n_positive) / n_labeled : 0.0;

    stats.len_min = lengths[0];
    stats.len_max = lengths[0];
    double sum = 0.0;
    for (std::size_t len : lengths) {
        stats.len_min = std::min(stats.len_min, len);
        stats.len_max = std::max(stats.len_max, len);
        sum += static_cast<double>(len);
    }
    stats.len_mean = sum / static_cast<double>(stats.n);
    if (stats.n > 1) {
        double sq = 0.0;
        for (std::size_t len : lengths) {
            const double d = static_cast<double>(len) - stats.len_mean;
            sq += d * d;
        }
        stats.len_std = std::sqrt(sq / static_cast<double>(stats.n - 1));
    }

    stats.pct_url = 100.0 * static_cast<double>(with_url) / static_cast<double>(stats.n);
    stats.pct_emoji = 100.0 * static_cast<double>(with_emoji) / static_cast<double>(stats.n);
    stats.pct_mention = 100.0 * static_cast<double>(with_mention) / static_cast<double>(stats.n);
    return stats;
}

std::string format_stats(const CorpusStats& stats) {
    std::ostringstream out;
    out << "n: " << stats.n << '\n';
    out << "n_positive: " << stats.n_positive << '\n';
    out << "pct_positive: " << fmt2(stats.pct_positive) << '\n';
    out << "len_min: " << stats.len_min << '\n';
    out << "len_max: " << stats.len_max << '\n';
    out << "len_mean: " << fmt2(stats.len_mean) << '\n';
    out << "len_std: " << fmt2(stats.len_std) << '\n';
    out << "pct_url: " << fmt2(stats.pct_url) << '\n';
    out << "pct_emoji: " << fmt2(stats.pct_emoji) << '\n';
    out << "pct_mention: " << fmt2(stats.pct_mention) << '\n';
    return out.str();
}

}  // namespace tweetkit

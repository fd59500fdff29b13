#include "tweetkit/ensemble.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace tweetkit {

namespace {

bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

double parse_probability(const std::string& value, const std::string& id, std::size_t line_no) {
    errno = 0;
    char* end = nullptr;
    const double prob = std::strtod(value.c_str(), &end);
    if (end != value.c_str() + value.size() || value.empty() || errno != 0) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": tweet '" + id +
                                 "': cannot parse probability '" + value + "'");
    }
    if (!(prob >= 0.0 && prob <= 1.0)) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": tweet '" + id +
                                 "': probability " + value + " outside [0,1]");
    }
    return prob;
}

// Every run must carry exactly the ids of `reference`; differences are
// reported per offending tweet id.
void check_same_keys(const RunPredictions& reference, const RunPredictions& run) {
    std::string missing, extra;
    for (const std::string& id : reference.order) {
        if (!run.probs.count(id)) missing += " '" + id + "'";
    }
    for (const std::string& id : run.order) {
        if (!reference.probs.count(id)) extra += " '" + id + "'";
    }
    if (!missing.empty() || !extra.empty()) {
        std::string message = std::string(to_string(run.model)) + " run " +
                              std::to_string(run.run_index) + ": tweet id set mismatch;";
        if (!missing.empty()) message += " missing:" + missing + ";";
        if (!extra.empty()) message += " unexpected:" + extra + ";";
        throw std::runtime_error(message);
    }
}

}  // namespace

std::string_view to_string(ModelType model) {
    switch (model) {
        case ModelType::CtBert:
            return "ct-bert";
        case ModelType::CtBertV2:
            return "ct-bert-v2";
        case ModelType::Roberta:
            return "roberta";
        case ModelType::RobertaT:
            return "roberta-t";
    }
    return "";
}

ModelType model_type_from_string(std::string_view name) {
    for (ModelType model : kAllModelTypes) {
        if (name == to_string(model)) return model;
    }
    throw std::invalid_argument("unknown model type '" + std::string(name) +
                                "' (expected ct-bert, ct-bert-v2, roberta or roberta-t)");
}

RunPredictions load_predictions(std::istream& in, ModelType model, int run_index) {
    RunPredictions run;
    run.model = model;
    run.run_index = run_index;

    std::string line;
    if (!read_line(in, line) || line != "tweet_id,prob") {
        throw std::runtime_error("line 1: expected header 'tweet_id,prob'");
    }
    std::size_t line_no = 1;
    while (read_line(in, line)) {
        ++line_no;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected 'tweet_id,prob'");
        }
        std::string id = line.substr(0, comma);
        if (id.empty()) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": empty tweet id");
        }
        const double prob = parse_probability(line.substr(comma + 1), id, line_no);
        if (!run.probs.emplace(id, prob).second) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": duplicate tweet id '" + id + "'");
        }
        run.order.push_back(std::move(id));
    }
    return run;
}

RunPredictions load_predictions(const std::filesystem::path& path, ModelType model,
                                int run_index) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open prediction file: " + path.string());
    try {
        return load_predictions(in, model, run_index);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

std::map<std::string, VoteResult> soft_vote(const std::vector<RunPredictions>& runs,
                                            double threshold) {
    if (runs.empty()) throw std::invalid_argument("soft_vote: no runs given");
    const ModelType model = runs.front().model;
    for (const RunPredictions& run : runs) {
        if (run.model != model) {
            throw std::invalid_argument("soft_vote: mixed model types (" +
                                        std::string(to_string(model)) + " vs " +
                                        std::string(to_string(run.model)) + ")");
        }
        check_same_keys(runs.front(), run);
        for (const auto& [id, prob] : run.probs) {
            if (!(prob >= 0.0 && prob <= 1.0)) {
                throw std::invalid_argument("soft_vote: tweet '" + id + "': probability " +
                                            std::to_string(prob) + " outside [0,1]");
            }
        }
    }

    std::map<std::string, VoteResult> result;
    for (const std::string& id : runs.front().order) {
        double sum = 0.0;
        for (const RunPredictions& run : runs) sum += run.probs.at(id);
        const double mean = sum / static_cast<double>(runs.size());
        result[id] = {mean, mean >= threshold ? Label::Positive : Label::Negative};
    }
    return result;
}

Label hard_vote(const std::map<ModelType, Label>& votes, ModelType tie_breaker) {
    if (votes.empty()) throw std::invalid_argument("hard_vote: empty vote map");
    const auto breaker = votes.find(tie_breaker);
    if (breaker == votes.end()) {
        throw std::invalid_argument("hard_vote: tie breaker '" +
                                    std::string(to_string(tie_breaker)) + "' has no vote");
    }
    std::size_t positive = 0, negative = 0;
    for (const auto& [model, label] : votes) {
        (label == Label::Positive ? positive : negative) += 1;
    }
    if (positive > negative) return Label::Positive;
    if (negative > positive) return Label::Negative;
    return breaker->second;
}

EnsembleConfig default_two_step_config(int runs_per_model) {
    EnsembleConfig config;
    for (ModelType model : kAllModelTypes) config.members.emplace_back(model, runs_per_model);
    config.tie_breaker = ModelType::Roberta;
    config.threshold = 0.5;
    return config;
}

std::map<std::string, Label> two_step_ensemble(const EnsembleConfig& config,
                                               const std::vector<RunPredictions>& runs) {
    if (config.members.empty()) {
        throw std::invalid_argument("two_step_ensemble: no ensemble members configured");
    }
    if (!(config.threshold > 0.0 && config.threshold < 1.0)) {
        throw std::invalid_argument("two_step_ensemble: threshold must lie in (0,1)");
    }
    bool breaker_is_member = false;
    for (const auto& [model, expected] : config.members) {
        if (expected < 1) {
            throw std::invalid_argument("two_step_ensemble: run count for " +
                                        std::string(to_string(model)) + " must be >= 1");
        }
        std::size_t duplicates = 0;
        for (const auto& [other, _] : config.members) duplicates += other == model;
        if (duplicates != 1) {
            throw std::invalid_argument("two_step_ensemble: duplicate member " +
                                        std::string(to_string(model)));
        }
        breaker_is_member = breaker_is_member || model == config.tie_breaker;
    }
    if (!breaker_is_member) {
        throw std::invalid_argument("two_step_ensemble: tie breaker '" +
                                    std::string(to_string(config.tie_breaker)) +
                                    "' is not an ensemble member");
    }

    for (const RunPredictions& run : runs) {
        const bool member = std::any_of(config.members.begin(), config.members.end(),
                                        [&](const auto& m) { return m.first == run.model; });
        if (!member) {
            throw std::invalid_argument("two_step_ensemble: run of non-member model '" +
                                        std::string(to_string(run.model)) + "'");
        }
        check_same_keys(runs.front(), run);
    }

    // Step 1: soft vote within each model type.
    std::map<ModelType, std::map<std::string, VoteResult>> per_type;
    for (const auto& [model, expected] : config.members) {
        std::vector<RunPredictions> member_runs;
        for (const RunPredictions& run : runs) {
            if (run.model == model) member_runs.push_back(run);
        }
        if (static_cast<int>(member_runs.size()) != expected) {
            throw std::invalid_argument(
                "two_step_ensemble: expected " + std::to_string(expected) + " runs of " +
                std::string(to_string(model)) + ", got " + std::to_string(member_runs.size()));
        }
        per_type[model] = soft_vote(member_runs, config.threshold);
    }

    // Step 2: hard vote across model types per tweet.
    std::map<std::string, Label> result;
    for (const auto& [id, first_vote] : per_type.begin()->second) {
        std::map<ModelType, Label> votes;
        for (const auto& [model, vote_map] : per_type) votes[model] = vote_map.at(id).label;
        result[id] = hard_vote(votes, config.tie_breaker);
    }
    return result;
}

void save_labels(std::ostream& out, const std::vector<std::string>& order,
                 const std::map<std::string, Label>& labels) {
    out << "tweet_id,label\n";
    for (const std::string& id : order) {
        const auto it = labels.find(id);
        if (it == labels.end()) {
            throw std::runtime_error("no label for tweet id '" + id + "'");
        }
        out << id << ',' << (it->second == Label::Positive ? '1' : '0') << '\n';
    }
}

void save_labels(const std::filesystem::path& path, const std::vector<std::string>& order,
                 const std::map<std::string, Label>& labels) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write label file: " + path.string());
    save_labels(out, order, labels);
    if (!out.flush()) throw std::runtime_error("write failure: " + path.string());
}

std::map<std::string, Label> load_labels(std::istream& in) {
    std::string line;
    if (!read_line(in, line) || line != "tweet_id,label") {
        throw std::runtime_error("line 1: expected header 'tweet_id,label'");
    }
    std::map<std::string, Label> labels;
    std::size_t line_no = 1;
    while (read_line(in, line)) {
        ++line_no;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected 'tweet_id,label'");
        }
        const std::string id = line.substr(0, comma);
        const std::string value = line.substr(comma + 1);
        if (id.empty()) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": empty tweet id");
        }
        Label label;
        if (value == "0")
            label = Label::Negative;
        else if (value == "1")
            label = Label::Positive;
        else
            throw std::runtime_error("line " + std::to_string(line_no) + ": invalid label '" +
                                     value + "' (expected 0 or 1)");
        if (!labels.emplace(id, label).second) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": duplicate tweet id '" + id + "'");
        }
    }
    return labels;
}

std::map<std::string, Label> load_labels(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open label file: " + path.string());
    try {
        return load_labels(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

}  // namespace tweetkit

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tweetkit/corpus.hpp"

namespace tweetkit {

enum class ModelType { CtBert, CtBertV2, Roberta, RobertaT };

inline constexpr ModelType kAllModelTypes[] = {ModelType::CtBert, ModelType::CtBertV2,
                                               ModelType::Roberta, ModelType::RobertaT};

std::string_view to_string(ModelType model);
ModelType model_type_from_string(std::string_view name);

// One fine-tuned run's positive-class probabilities. `order` keeps the ids
// in file order so downstream output can preserve it.
struct RunPredictions {
    ModelType model = ModelType::Roberta;
    int run_index = 0;
    std::vector<std::string> order;
    std::unordered_map<std::string, double> probs;
};

// Prediction CSV: UTF-8, header `tweet_id,prob`, prob a decimal in [0,1].
RunPredictions load_predictions(std::istream& in, ModelType model, int run_index);
RunPredictions load_predictions(const std::filesystem::path& path, ModelType model,
                                int run_index);

struct VoteResult {
    double mean_prob = 0.0;
    Label label = Label::Negative;

    bool operator==(const VoteResult&) const = default;
};

// Mean of per-run probabilities per tweet; Positive iff mean >= threshold.
// All runs must share one model type and one id set.
std::map<std::string, VoteResult> soft_vote(const std::vector<RunPredictions>& runs,
                                            double threshold = 0.5);

// Majority label; an exact tie returns the tie-breaker's own vote.
Label hard_vote(const std::map<ModelType, Label>& votes, ModelType tie_breaker);

struct EnsembleConfig {
    std::vector<std::pair<ModelType, int>> members;  // (type, expected run count)
    ModelType tie_breaker = ModelType::Roberta;
    double threshold = 0.5;
};

// The submission-2 setup: all four model types, five runs each, ties
// broken by RoBERTa.
EnsembleConfig default_two_step_config(int runs_per_model = 5);

// Soft vote within each model type, then hard vote across types per tweet.
std::map<std::string, Label> two_step_ensemble(const EnsembleConfig& config,
                                               const std::vector<RunPredictions>& runs);

// Label CSV: header `tweet_id,label`, label 0 or 1. Rows are written in
// `order`; every id in `order` must be present in `labels`.
void save_labels(std::ostream& out, const std::vector<std::string>& order,
                 const std::map<std::string, Label>& labels);
void save_labels(const std::filesystem::path& path, const std::vector<std::string>& order,
                 const std::map<std::string, Label>& labels);

std::map<std::string, Label> load_labels(std::istream& in);
std::map<std::string, Label> load_labels(const std::filesystem::path& path);

}  // namespace tweetkit

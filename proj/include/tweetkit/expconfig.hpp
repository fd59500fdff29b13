#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tweetkit/ensemble.hpp"
#include "tweetkit/transform.hpp"

namespace tweetkit {

// One fine-tuning job description for the external training harness.
// `extra` is a free-form passthrough for harness-specific settings; nothing
// beyond the fields below is defaulted.
struct TrainConfig {
    ModelType model = ModelType::Roberta;
    int epochs = 2;
    int max_seq_len = 128;
    double learning_rate = 0.0;
    Pipeline pipeline;
    int runs = 5;
    std::map<std::string, std::string> extra;

    bool operator==(const TrainConfig&) const = default;
};

// Hyperparameters used for every model type: 2 epochs, sequence length 128,
// 5 runs; learning rate 4e-5 for CT-BERT-v2 and Twitter-RoBERTa, 5e-6 for
// CT-BERT and RoBERTa. The pipeline defaults to submission2_pipeline.
TrainConfig default_train_config(ModelType model);

// Per-model preprocessing used for the second submission: raw text for both
// CT-BERT variants, URLs tokenized for RoBERTa, URLs removed for
// Twitter-RoBERTa.
Pipeline submission2_pipeline(ModelType model);

// Shortest decimal text that round-trips the value, with a compact exponent
// ("4e-5", not "4e-05"). Manifests store learning rates in this form.
std::string format_learning_rate(double lr);

// JSON manifest, one entry per config. emit followed by parse is the
// identity; emitting parsed output reproduces the bytes.
void emit_manifest(const std::vector<TrainConfig>& configs, std::ostream& out);
void emit_manifest(const std::vector<TrainConfig>& configs,
                   const std::filesystem::path& path);

std::vector<TrainConfig> parse_manifest(std::istream& in);
std::vector<TrainConfig> parse_manifest(const std::filesystem::path& path);

}  // namespace tweetkit

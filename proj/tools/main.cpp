#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tweetkit/corpus.hpp"
#include "tweetkit/ensemble.hpp"
#include "tweetkit/expconfig.hpp"
#include "tweetkit/metrics.hpp"
#include "tweetkit/transform.hpp"

namespace {

using namespace tweetkit;

TechniqueMode parse_mode(const std::string& value) {
    if (value == "tokenize") return TechniqueMode::Tokenize;
    if (value == "remove") return TechniqueMode::Remove;
    throw CLI::ValidationError("technique must be 'tokenize' or 'remove', got '" + value + "'");
}

struct PreprocessArgs {
    std::string input;
    std::string output;
    std::string url, mention, emoji;
};

void run_preprocess(const PreprocessArgs& args) {
    std::vector<Technique> steps;
    if (!args.url.empty()) steps.push_back({EntityKind::Url, parse_mode(args.url)});
    if (!args.mention.empty()) steps.push_back({EntityKind::Mention, parse_mode(args.mention)});
    if (!args.emoji.empty()) steps.push_back({EntityKind::Emoji, parse_mode(args.emoji)});
    const Pipeline pipeline{std::move(steps)};

    LoadedCorpus corpus = load_corpus_auto(args.input);
    for (Tweet& tweet : corpus.tweets) {
        tweet.text = apply_pipeline(tweet.text, pipeline);
    }
    save_corpus(args.output, corpus.tweets, corpus.has_labels);
}

void run_stats(const std::string& input) {
    const LoadedCorpus corpus = load_corpus_auto(input);
    std::cout << format_stats(compute_stats(corpus.tweets));
}

struct EnsembleArgs {
    std::string mode;
    std::vector<std::string> run_specs;
    std::string output;
    std::string tie_breaker = "roberta";
    double threshold = 0.5;
    int runs_per_model = 5;
    int expect_runs = 0;
};

std::vector<RunPredictions> load_runs(const std::vector<std::string>& specs) {
    std::vector<RunPredictions> runs;
    std::map<ModelType, int> next_index;
    for (const std::string& spec : specs) {
        const std::size_t colon = spec.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size()) {
            throw std::runtime_error("--run expects MODEL:PATH, got '" + spec + "'");
        }
        const ModelType model = model_type_from_string(spec.substr(0, colon));
        runs.push_back(load_predictions(std::filesystem::path(spec.substr(colon + 1)), model,
                                        next_index[model]++));
    }
    if (runs.empty()) throw std::runtime_error("no --run files given");
    return runs;
}

void run_ensemble(const EnsembleArgs& args) {
    if (!(args.threshold > 0.0 && args.threshold < 1.0)) {
        throw std::runtime_error("--threshold must lie in (0,1)");
    }
    const std::vector<RunPredictions> runs = load_runs(args.run_specs);
    std::map<std::string, Label> labels;
    if (args.mode == "soft") {
        if (args.expect_runs > 0 && static_cast<int>(runs.size()) != args.expect_runs) {
            throw std::runtime_error("expected " + std::to_string(args.expect_runs) +
                                     " runs, got " + std::to_string(runs.size()));
        }
        for (const auto& [id, vote] : soft_vote(runs, args.threshold)) {
            labels[id] = vote.label;
        }
    } else {
        EnsembleConfig config = default_two_step_config(args.runs_per_model);
        config.tie_breaker = model_type_from_string(args.tie_breaker);
        config.threshold = args.threshold;
        labels = two_step_ensemble(config, runs);
    }
    save_labels(std::filesystem::path(args.output), runs.front().order, labels);
}

void run_evaluate(const std::string& pred_path, const std::string& gold_path) {
    const std::map<std::string, Label> pred = load_labels(std::filesystem::path(pred_path));
    std::map<std::string, Label> gold;
    for (const Tweet& tweet : load_corpus(std::filesystem::path(gold_path), true)) {
        gold[tweet.id] = *tweet.label;
    }
    std::cout << format_report(prf(confusion(pred, gold)));
}

void run_emit_config(const std::vector<std::string>& model_names, const std::string& output) {
    std::vector<ModelType> models;
    for (const std::string& name : model_names) {
        if (name == "all") {
            models.insert(models.end(), std::begin(kAllModelTypes), std::end(kAllModelTypes));
        } else {
            models.push_back(model_type_from_string(name));
        }
    }
    if (models.empty()) {
        models.assign(std::begin(kAllModelTypes), std::end(kAllModelTypes));
    }
    for (std::size_t i = 0; i < models.size(); ++i) {
        for (std::size_t j = i + 1; j < models.size(); ++j) {
            if (models[i] == models[j]) {
                throw std::runtime_error("model '" + std::string(to_string(models[i])) +
                                         "' given more than once");
            }
        }
    }
    std::vector<TrainConfig> configs;
    for (ModelType model : models) configs.push_back(default_train_config(model));
    emit_manifest(configs, std::filesystem::path(output));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tweet preprocessing, corpus statistics, prediction ensembling and "
                 "evaluation for binary self-report classification"};
    app.require_subcommand(1);

    PreprocessArgs pre;
    CLI::App* preprocess = app.add_subcommand(
        "preprocess", "Apply entity tokenization/removal to a corpus TSV");
    preprocess->add_option("--input", pre.input, "corpus TSV to read")->required();
    preprocess->add_option("--output", pre.output, "corpus TSV to write")->required();
    const auto mode_check = CLI::IsMember({"tokenize", "remove"});
    preprocess->add_option("--url", pre.url, "technique for URLs")->check(mode_check);
    preprocess->add_option("--mention", pre.mention, "technique for mentions")->check(mode_check);
    preprocess->add_option("--emoji", pre.emoji, "technique for emoji")->check(mode_check);
    preprocess->callback([&] { run_preprocess(pre); });

    std::string stats_input;
    CLI::App* stats = app.add_subcommand("stats", "Report corpus statistics");
    stats->add_option("--input", stats_input, "corpus TSV to read")->required();
    stats->callback([&] { run_stats(stats_input); });

    EnsembleArgs ens;
    CLI::App* ensemble = app.add_subcommand(
        "ensemble", "Combine per-run prediction files into final labels");
    ensemble->add_option("--mode", ens.mode, "voting scheme")
        ->required()
        ->check(CLI::IsMember({"soft", "two-step"}));
    ensemble->add_option("--run", ens.run_specs, "prediction file as MODEL:PATH (repeatable)")
        ->required();
    ensemble->add_option("--output", ens.output, "label CSV to write")->required();
    ensemble->add_option("--tie-breaker", ens.tie_breaker,
                         "model whose vote breaks ties (two-step)");
    ensemble->add_option("--threshold", ens.threshold, "soft-vote decision threshold");
    ensemble->add_option("--runs-per-model", ens.runs_per_model,
                         "expected runs per model type (two-step)");
    ensemble->add_option("--expect-runs", ens.expect_runs,
                         "require exactly this many runs (soft)");
    ensemble->callback([&] { run_ensemble(ens); });

    std::string eval_pred, eval_gold;
    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "Score a label CSV against a labeled corpus TSV");
    evaluate->add_option("--pred", eval_pred, "predicted label CSV")->required();
    evaluate->add_option("--gold", eval_gold, "labeled corpus TSV")->required();
    evaluate->callback([&] { run_evaluate(eval_pred, eval_gold); });

    std::vector<std::string> config_models;
    std::string config_output;
    CLI::App* emit = app.add_subcommand(
        "emit-config", "Write a fine-tuning manifest for the external harness");
    emit->add_option("--model", config_models,
                     "model type or 'all' (repeatable; default all)");
    emit->add_option("--output", config_output, "manifest JSON to write")->required();
    emit->callback([&] { run_emit_config(config_models, config_output); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

#include "tweetkit/expconfig.hpp"

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace tweetkit {

namespace {

using ordered_json = nlohmann::ordered_json;

EntityKind entity_kind_from_string(const std::string& name) {
    if (name == "url") return EntityKind::Url;
    if (name == "mention") return EntityKind::Mention;
    if (name == "emoji") return EntityKind::Emoji;
    throw std::runtime_error("unknown entity kind '" + name + "'");
}

TechniqueMode mode_from_string(const std::string& name) {
    if (name == "tokenize") return TechniqueMode::Tokenize;
    if (name == "remove") return TechniqueMode::Remove;
    throw std::runtime_error("unknown technique mode '" + name + "'");
}

ordered_json pipeline_to_json(const Pipeline& pipeline) {
    ordered_json steps = ordered_json::array();
    for (const Technique& step : pipeline.steps()) {
        steps.push_back({{"entity", std::string(to_string(step.kind))},
                         {"mode", std::string(to_string(step.mode))}});
    }
    return steps;
}

Pipeline pipeline_from_json(const ordered_json& steps) {
    std::vector<Technique> techniques;
    for (const auto& step : steps) {
        techniques.push_back({entity_kind_from_string(step.at("entity").get<std::string>()),
                              mode_from_string(step.at("mode").get<std::string>())});
    }
    return Pipeline(std::move(techniques));
}

double parse_learning_rate(const std::string& text) {
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || errno != 0 || !(value > 0.0)) {
        throw std::runtime_error("invalid learning rate '" + text + "'");
    }
    return value;
}

}  // namespace

TrainConfig default_train_config(ModelType model) {
    TrainConfig config;
    config.model = model;
    config.epochs = 2;
    config.max_seq_len = 128;
    config.runs = 5;
    config.learning_rate =
        (model == ModelType::CtBertV2 || model == ModelType::RobertaT) ? 4e-5 : 5e-6;
    config.pipeline = submission2_pipeline(model);
    return config;
}

Pipeline submission2_pipeline(ModelType model) {
    switch (model) {
        case ModelType::CtBert:
        case ModelType::CtBertV2:
            return Pipeline{};
        case ModelType::Roberta:
            return Pipeline({{EntityKind::Url, TechniqueMode::Tokenize}});
        case ModelType::RobertaT:
            return Pipeline({{EntityKind::Url, TechniqueMode::Remove}});
    }
    return Pipeline{};
}

std::string format_learning_rate(double lr) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), lr);
    if (ec != std::errc()) throw std::runtime_error("cannot format learning rate");
    std::string text(buf, end);
    // Compact the exponent: 4e-05 -> 4e-5.
    const std::size_t e = text.find('e');
    if (e != std::string::npos) {
        std::size_t digits = e + 1;
        if (digits < text.size() && (text[digits] == '-' || text[digits] == '+')) ++digits;
        std::size_t first = digits;
        while (first + 1 < text.size() && text[first] == '0') ++first;
        text.erase(digits, first - digits);
    }
    return text;
}

void emit_manifest(const std::vector<TrainConfig>& configs, std::ostream& out) {
    if (configs.empty()) throw std::invalid_argument("manifest needs at least one config");
    ordered_json manifest;
    manifest["configs"] = ordered_json::array();
    for (const TrainConfig& config : configs) {
        ordered_json entry;
        entry["model"] = std::string(to_string(config.model));
        entry["epochs"] = config.epochs;
        entry["max_seq_len"] = config.max_seq_len;
        entry["learning_rate"] = format_learning_rate(config.learning_rate);
        entry["preprocessing"] = pipeline_to_json(config.pipeline);
        entry["runs"] = config.runs;
        entry["extra"] = ordered_json::object();
        for (const auto& [key, value] : config.extra) entry["extra"][key] = value;
        manifest["configs"].push_back(std::move(entry));
    }
    out << manifest.dump(2) << '\n';
}

void emit_manifest(const std::vector<TrainConfig>& configs, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest: " + path.string());
    emit_manifest(configs, out);
    if (!out.flush()) throw std::runtime_error("write failure: " + path.string());
}

std::vector<TrainConfig> parse_manifest(std::istream& in) {
    ordered_json manifest;
    try {
        manifest = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("manifest is not valid JSON: ") + e.what());
    }
    std::vector<TrainConfig> configs;
    try {
        for (const auto& entry : manifest.at("configs")) {
            TrainConfig config;
            config.model = model_type_from_string(entry.at("model").get<std::string>());
            config.epochs = entry.at("epochs").get<int>();
            config.max_seq_len = entry.at("max_seq_len").get<int>();
            config.learning_rate = parse_learning_rate(entry.at("learning_rate").get<std::string>());
            config.pipeline = pipeline_from_json(entry.at("preprocessing"));
            config.runs = entry.at("runs").get<int>();
            if (entry.contains("extra")) {
                for (const auto& [key, value] : entry.at("extra").items()) {
                    config.extra[key] = value.get<std::string>();
                }
            }
            if (config.epochs < 1 || config.max_seq_len < 1 || config.runs < 1) {
                throw std::runtime_error("config for " +
                                         std::string(to_string(config.model)) +
                                         " has a non-positive count field");
            }
            configs.push_back(std::move(config));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed manifest: ") + e.what());
    }
    if (configs.empty()) throw std::runtime_error("manifest contains no configs");
    return configs;
}

std::vector<TrainConfig> parse_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open manifest: " + path.string());
    return parse_manifest(in);
}

}  // namespace tweetkit

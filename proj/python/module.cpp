#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tweetkit/corpus.hpp"
#include "tweetkit/ensemble.hpp"
#include "tweetkit/expconfig.hpp"
#include "tweetkit/metrics.hpp"
#include "tweetkit/transform.hpp"
#include "tweetkit/unicode.hpp"

namespace py = pybind11;
using namespace tweetkit;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tweet preprocessing, corpus statistics, prediction ensembling and "
              "evaluation for binary self-report classification";

    py::enum_<EntityKind>(m, "EntityKind")
        .value("URL", EntityKind::Url)
        .value("MENTION", EntityKind::Mention)
        .value("EMOJI", EntityKind::Emoji);

    py::class_<EntitySpan>(m, "EntitySpan")
        .def(py::init<EntityKind, std::size_t, std::size_t>(), py::arg("kind"),
             py::arg("start"), py::arg("end"))
        .def_readonly("kind", &EntitySpan::kind)
        .def_readonly("start", &EntitySpan::start)
        .def_readonly("end", &EntitySpan::end)
        .def(py::self == py::self)
        .def("__repr__", [](const EntitySpan& span) {
            std::ostringstream out;
            out << "EntitySpan(" << to_string(span.kind) << ", " << span.start << ", "
                << span.end << ")";
            return out.str();
        });

    m.def("detect_urls", py::overload_cast<std::string_view>(&detect_urls), py::arg("text"));
    m.def("detect_mentions", py::overload_cast<std::string_view>(&detect_mentions),
          py::arg("text"));
    m.def("detect_emoji", py::overload_cast<std::string_view>(&detect_emoji), py::arg("text"));
    m.def("detect_all", py::overload_cast<std::string_view>(&detect_all), py::arg("text"));
    m.def("codepoint_length", &uni::codepoint_length, py::arg("text"));

    py::enum_<TechniqueMode>(m, "TechniqueMode")
        .value("TOKENIZE", TechniqueMode::Tokenize)
        .value("REMOVE", TechniqueMode::Remove);

    py::class_<Technique>(m, "Technique")
        .def(py::init<EntityKind, TechniqueMode>(), py::arg("kind"), py::arg("mode"))
        .def_readwrite("kind", &Technique::kind)
        .def_readwrite("mode", &Technique::mode)
        .def(py::self == py::self);

    py::class_<Pipeline>(m, "Pipeline")
        .def(py::init<>())
        .def(py::init<std::vector<Technique>>(), py::arg("steps"))
        .def_property_readonly("steps", &Pipeline::steps)
        .def("empty", &Pipeline::empty)
        .def(py::self == py::self);

    m.def("placeholder", [](EntityKind kind) { return std::string(placeholder(kind)); },
          py::arg("kind"));
    m.def("apply_technique", &apply_technique, py::arg("text"), py::arg("technique"));
    m.def("apply_pipeline", &apply_pipeline, py::arg("text"), py::arg("pipeline"));

    py::enum_<Label>(m, "Label")
        .value("NEGATIVE", Label::Negative)
        .value("POSITIVE", Label::Positive);

    py::class_<Tweet>(m, "Tweet")
        .def(py::init([](std::string id, std::string text, std::optional<Label> label) {
                 return Tweet{std::move(id), std::move(text), label};
             }),
             py::arg("id"), py::arg("text"), py::arg("label") = py::none())
        .def_readwrite("id", &Tweet::id)
        .def_readwrite("text", &Tweet::text)
        .def_readwrite("label", &Tweet::label)
        .def(py::self == py::self);

    py::class_<CorpusStats>(m, "CorpusStats")
        .def_readonly("n", &CorpusStats::n)
        .def_readonly("n_positive", &CorpusStats::n_positive)
        .def_readonly("pct_positive", &CorpusStats::pct_positive)
        .def_readonly("len_min", &CorpusStats::len_min)
        .def_readonly("len_max", &CorpusStats::len_max)
        .def_readonly("len_mean", &CorpusStats::len_mean)
        .def_readonly("len_std", &CorpusStats::len_std)
        .def_readonly("pct_url", &CorpusStats::pct_url)
        .def_readonly("pct_emoji", &CorpusStats::pct_emoji)
        .def_readonly("pct_mention", &CorpusStats::pct_mention);

    m.def("load_corpus",
          [](const std::string& path, bool has_labels) {
              return load_corpus(std::filesystem::path(path), has_labels);
          },
          py::arg("path"), py::arg("has_labels"));
    m.def("save_corpus",
          [](const std::string& path, const std::vector<Tweet>& corpus, bool with_labels) {
              save_corpus(std::filesystem::path(path), corpus, with_labels);
          },
          py::arg("path"), py::arg("corpus"), py::arg("with_labels"));
    m.def("compute_stats", &compute_stats, py::arg("corpus"));
    m.def("format_stats", &format_stats, py::arg("stats"));

    py::enum_<ModelType>(m, "ModelType")
        .value("CT_BERT", ModelType::CtBert)
        .value("CT_BERT_V2", ModelType::CtBertV2)
        .value("ROBERTA", ModelType::Roberta)
        .value("ROBERTA_T", ModelType::RobertaT);

    py::class_<RunPredictions>(m, "RunPredictions")
        .def(py::init([](ModelType model, int run_index, const py::dict& probs) {
                 RunPredictions run;
                 run.model = model;
                 run.run_index = run_index;
                 for (const auto& item : probs) {
                     std::string id = item.first.cast<std::string>();
                     run.probs[id] = item.second.cast<double>();
                     run.order.push_back(std::move(id));
                 }
                 return run;
             }),
             py::arg("model"), py::arg("run_index"), py::arg("probs"))
        .def_readonly("model", &RunPredictions::model)
        .def_readonly("run_index", &RunPredictions::run_index)
        .def_readonly("order", &RunPredictions::order)
        .def_readonly("probs", &RunPredictions::probs);

    m.def("load_predictions",
          [](const std::string& path, ModelType model, int run_index) {
              return load_predictions(std::filesystem::path(path), model, run_index);
          },
          py::arg("path"), py::arg("model"), py::arg("run_index"));

    py::class_<VoteResult>(m, "VoteResult")
        .def_readonly("mean_prob", &VoteResult::mean_prob)
        .def_readonly("label", &VoteResult::label)
        .def("__repr__", [](const VoteResult& vote) {
            std::ostringstream out;
            out << "VoteResult(" << vote.mean_prob << ", "
                << (vote.label == Label::Positive ? "POSITIVE" : "NEGATIVE") << ")";
            return out.str();
        });

    m.def("soft_vote", &soft_vote, py::arg("runs"), py::arg("threshold") = 0.5);
    m.def("hard_vote", &hard_vote, py::arg("votes"), py::arg("tie_breaker"));

    py::class_<EnsembleConfig>(m, "EnsembleConfig")
        .def(py::init([](std::vector<std::pair<ModelType, int>> members, ModelType tie_breaker,
                         double threshold) {
                 return EnsembleConfig{std::move(members), tie_breaker, threshold};
             }),
             py::arg("members"), py::arg("tie_breaker"), py::arg("threshold") = 0.5)
        .def_readwrite("members", &EnsembleConfig::members)
        .def_readwrite("tie_breaker", &EnsembleConfig::tie_breaker)
        .def_readwrite("threshold", &EnsembleConfig::threshold);

    m.def("default_two_step_config", &default_two_step_config, py::arg("runs_per_model") = 5);
    m.def("two_step_ensemble", &two_step_ensemble, py::arg("config"), py::arg("runs"));
    m.def("save_labels",
          [](const std::string& path, const std::vector<std::string>& order,
             const std::map<std::string, Label>& labels) {
              save_labels(std::filesystem::path(path), order, labels);
          },
          py::arg("path"), py::arg("order"), py::arg("labels"));
    m.def("load_labels",
          [](const std::string& path) { return load_labels(std::filesystem::path(path)); },
          py::arg("path"));

    py::class_<ConfusionCounts>(m, "ConfusionCounts")
        .def(py::init([](std::size_t tp, std::size_t fp, std::size_t fn, std::size_t tn) {
                 return ConfusionCounts{tp, fp, fn, tn};
             }),
             py::arg("tp") = 0, py::arg("fp") = 0, py::arg("fn") = 0, py::arg("tn") = 0)
        .def_readwrite("tp", &ConfusionCounts::tp)
        .def_readwrite("fp", &ConfusionCounts::fp)
        .def_readwrite("fn", &ConfusionCounts::fn)
        .def_readwrite("tn", &ConfusionCounts::tn)
        .def(py::self == py::self);

    py::class_<MetricsReport>(m, "MetricsReport")
        .def_readonly("counts", &MetricsReport::counts)
        .def_readonly("precision", &MetricsReport::precision)
        .def_readonly("recall", &MetricsReport::recall)
        .def_readonly("f1", &MetricsReport::f1);

    m.def("confusion", &confusion, py::arg("pred"), py::arg("gold"));
    m.def("prf", &prf, py::arg("counts"));
    m.def("f1_from_pr", &f1_from_pr, py::arg("precision"), py::arg("recall"));
    m.def("format_report", &format_report, py::arg("report"));

    py::class_<TrainConfig>(m, "TrainConfig")
        .def(py::init<>())
        .def_readwrite("model", &TrainConfig::model)
        .def_readwrite("epochs", &TrainConfig::epochs)
        .def_readwrite("max_seq_len", &TrainConfig::max_seq_len)
        .def_readwrite("learning_rate", &TrainConfig::learning_rate)
        .def_readwrite("pipeline", &TrainConfig::pipeline)
        .def_readwrite("runs", &TrainConfig::runs)
        .def_readwrite("extra", &TrainConfig::extra)
        .def(py::self == py::self);

    m.def("default_train_config", &default_train_config, py::arg("model"));
    m.def("submission2_pipeline", &submission2_pipeline, py::arg("model"));
    m.def("format_learning_rate", &format_learning_rate, py::arg("learning_rate"));
    m.def("emit_manifest",
          [](const std::vector<TrainConfig>& configs, const std::string& path) {
              emit_manifest(configs, std::filesystem::path(path));
          },
          py::arg("configs"), py::arg("path"));
    m.def("parse_manifest",
          [](const std::string& path) { return parse_manifest(std::filesystem::path(path)); },
          py::arg("path"));

#ifdef VERSION_INFO
#define TWEETKIT_STR2(x) #x
#define TWEETKIT_STR(x) TWEETKIT_STR2(x)
    m.attr("__version__") = TWEETKIT_STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}

#include "tweetkit/metrics.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace tweetkit {

namespace {

std::string pct1(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f", 100.0 * value);
    return buf;
}

}  // namespace

ConfusionCounts confusion(const std::map<std::string, Label>& pred,
                          const std::map<std::string, Label>& gold) {
    std::string missing, extra;
    for (const auto& [id, label] : gold) {
        if (!pred.count(id)) missing += " '" + id + "'";
    }
    for (const auto& [id, label] : pred) {
        if (!gold.count(id)) extra += " '" + id + "'";
    }
    if (!missing.empty() || !extra.empty()) {
        std::string message = "prediction/gold tweet id mismatch;";
        if (!missing.empty()) message += " missing from predictions:" + missing + ";";
        if (!extra.empty()) message += " not in gold:" + extra + ";";
        throw std::invalid_argument(message);
    }

    ConfusionCounts counts;
    for (const auto& [id, predicted] : pred) {
        const Label actual = gold.at(id);
        if (predicted == Label::Positive) {
            (actual == Label::Positive ? counts.tp : counts.fp) += 1;
        } else {
            (actual == Label::Positive ? counts.fn : counts.tn) += 1;
        }
    }
    return counts;
}

MetricsReport prf(const ConfusionCounts& counts) {
    MetricsReport report;
    report.counts = counts;
    const double tp = static_cast<double>(counts.tp);
    if (counts.tp + counts.fp > 0) report.precision = tp / static_cast<double>(counts.tp + counts.fp);
    if (counts.tp + counts.fn > 0) report.recall = tp / static_cast<double>(counts.tp + counts.fn);
    report.f1 = f1_from_pr(report.precision, report.recall);
    return report;
}

double f1_from_pr(double precision, double recall) {
    if (!(precision >= 0.0 && precision <= 1.0)) {
        throw std::invalid_argument("precision " + std::to_string(precision) +
                                    " outside [0,1]");
    }
    if (!(recall >= 0.0 && recall <= 1.0)) {
        throw std::invalid_argument("recall " + std::to_string(recall) + " outside [0,1]");
    }
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

std::string format_report(const MetricsReport& report) {
    std::ostringstream out;
    out << "tp: " << report.counts.tp << '\n';
    out << "fp: " << report.counts.fp << '\n';
    out << "fn: " << report.counts.fn << '\n';
    out << "tn: " << report.counts.tn << '\n';
    out << "precision: " << pct1(report.precision) << '\n';
    out << "recall: " << pct1(report.recall) << '\n';
    out << "f1: " << pct1(report.f1) << '\n';
    return out.str();
}

}  // namespace tweetkit

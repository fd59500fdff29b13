#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "tweetkit/corpus.hpp"

namespace tweetkit {

struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t tn = 0;

    bool operator==(const ConfusionCounts&) const = default;
};

struct MetricsReport {
    ConfusionCounts counts;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// Positive is the self-report class. Key sets must match; a mismatch throws
// with every missing and extra id listed.
ConfusionCounts confusion(const std::map<std::string, Label>& pred,
                          const std::map<std::string, Label>& gold);

// Zero denominators yield 0 rather than NaN.
MetricsReport prf(const ConfusionCounts& counts);

// Harmonic mean; 0 when both inputs are 0. Throws on inputs outside [0,1].
double f1_from_pr(double precision, double recall);

// key: value lines; precision/recall/f1 as percentages at one decimal.
std::string format_report(const MetricsReport& report);

}  // namespace tweetkit

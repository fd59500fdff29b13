// Acceptance suite: one checked criterion per section, one PASS/FAIL line
// each. Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "golden_spans.hpp"
#include "oracles.hpp"
#include "subprocess.hpp"
#include "tweetkit/corpus.hpp"
#include "tweetkit/ensemble.hpp"
#include "tweetkit/expconfig.hpp"
#include "tweetkit/metrics.hpp"
#include "tweetkit/transform.hpp"

using namespace tweetkit;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    if (!ok) ++failures;
}

bool rel_close(double a, double b, double rel) {
    if (a == b) return true;
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

std::size_t count_occurrences(const std::string& text, std::string_view needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

// The submissions' precision/recall pairs reproduce their F1 scores.
void f1_arithmetic() {
    const double sub2 = f1_from_pr(0.833, 0.858);
    const double sub1 = f1_from_pr(0.798, 0.822);
    std::ostringstream detail;
    detail << "f1(0.833,0.858)=" << sub2 << ", f1(0.798,0.822)=" << sub1;
    report("f1-arithmetic",
           sub2 >= 0.8448 && sub2 <= 0.8458 && sub1 >= 0.8093 && sub1 <= 0.8103,
           detail.str());
}

// Dataset proportion: 1,391 positives of 8,000 labeled prints exactly 17.39.
void dataset_proportion() {
    std::vector<Tweet> corpus;
    for (int i = 0; i < 8000; ++i) {
        corpus.push_back(
            {"t" + std::to_string(i), "x", i < 1391 ? Label::Positive : Label::Negative});
    }
    const std::string line = "pct_positive: 17.39\n";
    const std::string stats = format_stats(compute_stats(corpus));
    report("dataset-proportion", stats.find(line) != std::string::npos,
           "expected report line 'pct_positive: 17.39'");
}

// Placeholder fidelity: the literal strings, and one of each placeholder
// after full tokenization of a one-of-each corpus.
void placeholder_fidelity() {
    bool ok = placeholder(EntityKind::Url) == "$URL$" &&
              placeholder(EntityKind::Mention) == "$MENTION$" &&
              placeholder(EntityKind::Emoji) == "$EMOJI$";
    const Pipeline all({{EntityKind::Url, TechniqueMode::Tokenize},
                        {EntityKind::Mention, TechniqueMode::Tokenize},
                        {EntityKind::Emoji, TechniqueMode::Tokenize}});
    const std::string out =
        apply_pipeline("ping @bob see https://t.co/x now \U0001F64F", all);
    ok = ok && count_occurrences(out, "$URL$") == 1 &&
         count_occurrences(out, "$MENTION$") == 1 && count_occurrences(out, "$EMOJI$") == 1;
    report("placeholder-fidelity", ok, out);
}

// Idempotence: twice equals once for all six technique pairs on 1,000
// generated tweets, and the treated kind is gone afterwards.
void idempotence_suite() {
    testgen::TweetGenerator gen(90210);
    constexpr EntityKind kinds[] = {EntityKind::Url, EntityKind::Mention, EntityKind::Emoji};
    constexpr TechniqueMode modes[] = {TechniqueMode::Tokenize, TechniqueMode::Remove};
    int checked = 0;
    std::string first_failure;
    for (int i = 0; i < 1000; ++i) {
        const std::string text = gen.tweet();
        for (EntityKind kind : kinds) {
            for (TechniqueMode mode : modes) {
                const Technique technique{kind, mode};
                const std::string once = apply_technique(text, technique);
                const std::string twice = apply_technique(once, technique);
                std::vector<EntitySpan> left;
                switch (kind) {
                    case EntityKind::Url:
                        left = detect_urls(std::string_view(once));
                        break;
                    case EntityKind::Mention:
                        left = detect_mentions(std::string_view(once));
                        break;
                    case EntityKind::Emoji:
                        left = detect_emoji(std::string_view(once));
                        break;
                }
                if (twice != once || !left.empty()) {
                    if (first_failure.empty()) first_failure = text;
                } else {
                    ++checked;
                }
            }
        }
    }
    std::ostringstream detail;
    detail << checked << "/6000 (kind, mode) applications";
    if (!first_failure.empty()) detail << "; first failing tweet: " << first_failure;
    report("idempotence-suite", checked == 6000, detail.str());
}

// Hard-vote exhaustion: 16 assignments x 4 tie breakers.
void hard_vote_exhaustion() {
    int ok_cases = 0;
    int tie_cases = 0;
    for (int mask = 0; mask < 16; ++mask) {
        std::map<ModelType, Label> votes;
        int positives = 0;
        for (int m = 0; m < 4; ++m) {
            const bool positive = (mask >> m) & 1;
            positives += positive;
            votes[kAllModelTypes[m]] = positive ? Label::Positive : Label::Negative;
        }
        for (ModelType breaker : kAllModelTypes) {
            const Label got = hard_vote(votes, breaker);
            Label want;
            if (positives > 2)
                want = Label::Positive;
            else if (positives < 2)
                want = Label::Negative;
            else {
                want = votes.at(breaker);
                ++tie_cases;
            }
            if (got == want) ++ok_cases;
        }
    }
    std::ostringstream detail;
    detail << ok_cases << "/64 cases, " << tie_cases << " tie resolutions";
    report("hard-vote-exhaustion", ok_cases == 64 && tie_cases == 24, detail.str());
}

// Two-step ensemble equals the brute-force oracle on random instances.
void two_step_oracle() {
    testgen::TweetGenerator gen(7777);
    int mismatches = 0;
    for (int instance = 0; instance < 100; ++instance) {
        std::vector<RunPredictions> runs;
        std::map<std::string, std::map<ModelType, std::vector<double>>> raw;
        for (ModelType model : kAllModelTypes) {
            for (int r = 0; r < 5; ++r) {
                RunPredictions run;
                run.model = model;
                run.run_index = r;
                for (int t = 0; t < 100; ++t) {
                    const std::string id = "t" + std::to_string(t);
                    const double p = gen.probability();
                    run.order.push_back(id);
                    run.probs[id] = p;
                    raw[id][model].push_back(p);
                }
                runs.push_back(std::move(run));
            }
        }
        const auto got = two_step_ensemble(default_two_step_config(5), runs);
        for (const auto& [id, label] : got) {
            if (label != oracle::two_step_decision(raw.at(id), ModelType::Roberta, 0.5)) {
                ++mismatches;
            }
        }
        raw.clear();
    }
    report("two-step-oracle", mismatches == 0,
           "100 instances x 100 tweets, " + std::to_string(mismatches) + " mismatches");
}

// Metrics match pairwise enumeration exactly and the direct formulas to 1e-12.
void metrics_oracle() {
    testgen::TweetGenerator gen(1024);
    int bad = 0;
    for (int round = 0; round < 100; ++round) {
        const int n = gen.range(1, 1000);
        std::map<std::string, Label> pred, gold;
        std::vector<std::pair<Label, Label>> pairs;
        for (int i = 0; i < n; ++i) {
            const Label p = gen.chance(35) ? Label::Positive : Label::Negative;
            const Label g = gen.chance(35) ? Label::Positive : Label::Negative;
            const std::string id = "t" + std::to_string(i);
            pred[id] = p;
            gold[id] = g;
            pairs.emplace_back(p, g);
        }
        const MetricsReport got = prf(confusion(pred, gold));
        const oracle::PairCounts want = oracle::pairwise_confusion(pairs);
        const bool counts_ok = got.counts.tp == want.tp && got.counts.fp == want.fp &&
                               got.counts.fn == want.fn && got.counts.tn == want.tn;
        const bool values_ok =
            std::abs(got.precision - oracle::precision_of(want)) <= 1e-12 &&
            std::abs(got.recall - oracle::recall_of(want)) <= 1e-12 &&
            std::abs(got.f1 - oracle::f1_of(want)) <= 1e-12;
        if (!counts_ok || !values_ok) ++bad;
    }
    report("metrics-oracle", bad == 0,
           "100 random vectors, " + std::to_string(bad) + " disagreements");
}

// Stats match a brute-force recomputation to 1e-9 relative error.
void stats_oracle() {
    testgen::TweetGenerator gen(3333);
    int bad = 0;
    for (int round = 0; round < 25; ++round) {
        std::vector<Tweet> corpus;
        const int n = gen.range(1, 1000);
        for (int i = 0; i < n; ++i) {
            corpus.push_back({"t" + std::to_string(i), gen.tweet(),
                              gen.chance(60) ? std::optional(gen.chance(20) ? Label::Positive
                                                                            : Label::Negative)
                                             : std::nullopt});
        }
        const CorpusStats got = compute_stats(corpus);
        const oracle::StatsResult want = oracle::corpus_stats(corpus);
        const bool ok = got.n == want.n && got.n_positive == want.n_positive &&
                        got.len_min == want.len_min && got.len_max == want.len_max &&
                        rel_close(got.len_mean, want.len_mean, 1e-9) &&
                        rel_close(got.len_std, want.len_std, 1e-9) &&
                        rel_close(got.pct_positive, want.pct_positive, 1e-9) &&
                        rel_close(got.pct_url, want.pct_url, 1e-9) &&
                        rel_close(got.pct_emoji, want.pct_emoji, 1e-9) &&
                        rel_close(got.pct_mention, want.pct_mention, 1e-9);
        if (!ok) ++bad;
    }
    const CorpusStats degenerate = compute_stats({{"only", "tweet", std::nullopt}});
    const bool degenerate_ok = degenerate.len_std == 0.0;
    report("stats-oracle", bad == 0 && degenerate_ok,
           "25 random corpora, " + std::to_string(bad) +
               " disagreements; n=1 std=" + std::to_string(degenerate.len_std));
}

// Golden parser corpus: every hand-constructed span list reproduced.
void golden_parser_corpus() {
    int bad = 0;
    std::string first;
    for (const golden::Case& test : golden::cases()) {
        if (detect_all(std::string_view(test.text)) != test.spans) {
            ++bad;
            if (first.empty()) first = test.text;
        }
    }
    std::ostringstream detail;
    detail << golden::cases().size() << " cases, " << bad << " failures";
    if (!first.empty()) detail << "; first: \"" << first << '"';
    report("golden-parser-corpus", bad == 0 && golden::cases().size() >= 50, detail.str());
}

// CLI determinism: byte-identical reruns, lossless config round trip.
void cli_determinism() {
    using namespace subprocess;
    try {
        TempDir dir;
        write_file(dir.file("in.tsv"),
                   "tweet_id\ttext\tlabel\n"
                   "t1\tsee https://t.co/9o2la81F96 now\t0\n"
                   "t2\t@RaeDiamond thanks \U0001F64F\t1\n");
        write_file(dir.file("gold.tsv"),
                   "tweet_id\ttext\tlabel\nt1\tx\t1\nt2\ty\t0\n");
        write_file(dir.file("pred.csv"), "tweet_id,label\nt1,1\nt2,0\n");
        for (int r = 0; r < 5; ++r) {
            write_file(dir.file("roberta" + std::to_string(r) + ".csv"),
                       "tweet_id,prob\nt1,0.6\nt2,0.2\n");
        }
        std::string ensemble_runs;
        for (int r = 0; r < 5; ++r) {
            ensemble_runs += " --run roberta:" + dir.file("roberta" + std::to_string(r) +
                                                          ".csv").string();
        }

        const std::vector<std::pair<std::string, std::string>> commands = {
            {"preprocess", "preprocess --input " + dir.file("in.tsv").string() +
                               " --output " + dir.file("pre.tsv").string() +
                               " --url tokenize --mention remove --emoji tokenize"},
            {"stats", "stats --input " + dir.file("in.tsv").string()},
            {"ensemble", "ensemble --mode soft" + ensemble_runs + " --output " +
                             dir.file("labels.csv").string()},
            {"evaluate", "evaluate --pred " + dir.file("pred.csv").string() + " --gold " +
                             dir.file("gold.tsv").string()},
            {"emit-config", "emit-config --output " + dir.file("manifest.json").string()},
        };

        bool ok = true;
        std::string detail;
        for (const auto& [name, command] : commands) {
            const CommandResult first = run_cli(command, dir, name + "-1");
            const std::string file_state =
                name == "preprocess"    ? read_file(dir.file("pre.tsv"))
                : name == "ensemble"    ? read_file(dir.file("labels.csv"))
                : name == "emit-config" ? read_file(dir.file("manifest.json"))
                                        : "";
            const CommandResult second = run_cli(command, dir, name + "-2");
            const std::string file_state2 =
                name == "preprocess"    ? read_file(dir.file("pre.tsv"))
                : name == "ensemble"    ? read_file(dir.file("labels.csv"))
                : name == "emit-config" ? read_file(dir.file("manifest.json"))
                                        : "";
            if (!first.ok || !second.ok || first.out != second.out ||
                file_state != file_state2) {
                ok = false;
                detail = name + " differed between runs";
                break;
            }
        }

        if (ok) {
            const auto parsed = parse_manifest(dir.file("manifest.json"));
            ok = parsed.size() == 4;
            for (std::size_t i = 0; ok && i < parsed.size(); ++i) {
                ok = parsed[i] == default_train_config(kAllModelTypes[i]);
            }
            if (!ok) detail = "manifest round trip was not lossless";
        }
        report("cli-determinism", ok, detail);
    } catch (const std::exception& e) {
        report("cli-determinism", false, e.what());
    }
}

}  // namespace

int main() {
    f1_arithmetic();
    dataset_proportion();
    placeholder_fidelity();
    idempotence_suite();
    hard_vote_exhaustion();
    two_step_oracle();
    metrics_oracle();
    stats_oracle();
    golden_parser_corpus();
    cli_determinism();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}

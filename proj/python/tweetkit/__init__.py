"""Tweet preprocessing, corpus statistics, prediction ensembling and
evaluation for binary self-report classification."""

from tweetkit._core import (
    ConfusionCounts,
    CorpusStats,
    EnsembleConfig,
    EntityKind,
    EntitySpan,
    Label,
    MetricsReport,
    ModelType,
    Pipeline,
    RunPredictions,
    Technique,
    TechniqueMode,
    TrainConfig,
    Tweet,
    VoteResult,
    __version__,
    apply_pipeline,
    apply_technique,
    codepoint_length,
    compute_stats,
    confusion,
    default_two_step_config,
    detect_all,
    detect_emoji,
    detect_mentions,
    detect_urls,
    emit_manifest,
    f1_from_pr,
    format_learning_rate,
    format_report,
    format_stats,
    hard_vote,
    load_corpus,
    load_labels,
    load_predictions,
    default_train_config,
    parse_manifest,
    placeholder,
    prf,
    save_corpus,
    save_labels,
    soft_vote,
    submission2_pipeline,
    two_step_ensemble,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

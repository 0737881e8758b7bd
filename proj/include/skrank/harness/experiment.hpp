#ifndef SKRANK_HARNESS_EXPERIMENT_HPP_
#define SKRANK_HARNESS_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <skrank/centrality/centrality.hpp>
#include <skrank/centrality/graph.hpp>
#include <skrank/core/ground_truth.hpp>
#include <skrank/core/ranking.hpp>
#include <skrank/eval/metrics.hpp>
#include <skrank/harness/config.hpp>

namespace skrank {

/// Rankers and labels ready for the trial loop. Every ranking orders exactly
/// the labelled candidates.
struct PreparedDataset {
    std::string kind;  // "graph" or "synthetic"
    std::vector<std::string> ranker_names;
    std::vector<ScoreVector> scores;
    std::vector<Ranking> rankings;
    GroundTruth truth;
    /// Graph nodes without a ground-truth record; dropped before ranking.
    std::size_t dropped_unlabeled = 0;
    /// Labelled candidates absent from a ranker's graph, per ranker; they score 0.
    std::vector<std::size_t> missing_from_graph;
    std::vector<std::pair<std::string, IngestStats>> ingest;
};

/// Loads graphs and labels (or generates the synthetic study) and derives
/// one ranking per configured ranker with seeded tie-breaking.
PreparedDataset prepare_dataset(const ExperimentConfig &config);

struct ScoredEntry {
    std::string name;
    std::string kind;  // centrality metric, aggregation method or "logistic_regression"
    MetricSummary auc;
    MetricSummary ap_at_k;
    /// From the first successful trial, when ROC output is enabled.
    std::optional<RocCurve> roc;
};

struct TrialRecord {
    int index = 0;
    std::uint64_t seed = 0;
    std::size_t train_size = 0;
    std::size_t test_size = 0;
    std::size_t ap_k = 0;
    /// "stage: message" when the trial was aborted.
    std::optional<std::string> error;
    /// Learned weights keyed by weight metric name, one per ranker.
    std::map<std::string, std::vector<double>> weights;
    std::map<std::string, std::vector<double>> weight_metric_values;
    std::vector<std::string> warnings;
};

struct ExperimentTiming {
    double prepare_seconds = 0.0;
    double trials_seconds = 0.0;
    double total_seconds = 0.0;
};

struct ExperimentReport {
    std::string software_version;
    nlohmann::json config;
    std::uint64_t seed = 0;
    std::string dataset_kind;
    std::size_t candidates = 0;
    std::size_t positives = 0;
    std::size_t dropped_unlabeled = 0;
    std::vector<std::size_t> missing_from_graph;
    std::vector<std::pair<std::string, IngestStats>> ingest;
    std::size_t ap_k = 0;
    std::vector<ScoredEntry> rankers;
    std::vector<ScoredEntry> methods;  // configuration order, one per configured method
    std::vector<TrialRecord> trials;
    std::vector<std::string> warnings;
    ExperimentTiming timing;
};

/**
 * Full protocol: prepare the dataset, split, then per trial learn weights on
 * the training candidates, aggregate, and score every ranker and method on
 * the test candidates. Trials run concurrently; a failing trial is recorded
 * and excluded from the summaries. Deterministic per master seed apart from
 * `timing`.
 */
ExperimentReport run_experiment(const ExperimentConfig &config);

/// Runs the trial loop on an already prepared dataset.
ExperimentReport run_experiment(const ExperimentConfig &config, const PreparedDataset &dataset);

} // namespace skrank

#endif // SKRANK_HARNESS_EXPERIMENT_HPP_

#ifndef SKRANK_HARNESS_CONFIG_HPP_
#define SKRANK_HARNESS_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include <skrank/aggregate/aggregate.hpp>
#include <skrank/aggregate/weights.hpp>
#include <skrank/centrality/centrality.hpp>
#include <skrank/eval/logistic.hpp>
#include <skrank/eval/metrics.hpp>
#include <skrank/eval/split.hpp>
#include <skrank/harness/synthetic.hpp>

namespace skrank {

inline constexpr int kConfigSchemaVersion = 1;

struct GraphInput {
    std::string name;
    std::string path;
    ParallelEdges mode = ParallelEdges::collapse;
};

/// One ranker: a centrality metric computed on one of the configured graphs.
struct RankerInput {
    std::string name;
    std::string graph;
    /// indegree | outdegree | weighted_indegree | weighted_outdegree | pagerank | hub | authority
    std::string metric;
};

struct GraphDataset {
    std::vector<GraphInput> graphs;
    std::vector<RankerInput> rankers;
    std::string truth_path;
    double threshold = 0.0;
    PageRankOptions pagerank;
    HitsOptions hits;
};

enum class InitialOrdering { supervised_borda, borda };

/// One row of the comparison table.
struct MethodConfig {
    std::string name;
    /// Empty for the logistic-regression baseline.
    std::optional<AggregationMethod> method;
    bool logistic_regression = false;
    /// Learn ranker weights on the training split; otherwise unit weights.
    bool supervised = false;
    TopK top_k = TopK::fraction(kDefaultTopKFraction);
    SortKind sort = SortKind::quick;
    InitialOrdering initial = InitialOrdering::supervised_borda;
    /// Overrides the experiment-wide weight metric.
    std::optional<WeightMetric> weight_metric;
};

struct ExperimentConfig {
    std::uint64_t seed = 0;
    std::variant<GraphDataset, SyntheticStudy> dataset;
    SplitSpec split;
    std::size_t ap_k = 100;
    ApDenominator ap_denominator = ApDenominator::min_k_positives;
    WeightOptions weights;
    std::vector<MethodConfig> methods;
    LogisticOptions logistic;
    bool include_roc = true;
    std::optional<std::string> json_output;
    std::optional<std::string> csv_output;
    /// The document the config was parsed from, echoed into reports.
    nlohmann::json source;
};

/// Parses a config document. Relative paths are resolved against `base_dir`.
/// Throws InvalidArgument naming the offending key.
ExperimentConfig parse_config(const nlohmann::json &doc, const std::string &base_dir = ".");
ExperimentConfig load_config_file(const std::string &path);

/// Replaces the master seed and everything derived from it.
void set_master_seed(ExperimentConfig &config, std::uint64_t seed);

/// Checks that referenced files exist and values are in range.
void validate_config(const ExperimentConfig &config);

} // namespace skrank

#endif // SKRANK_HARNESS_CONFIG_HPP_

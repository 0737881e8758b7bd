#ifndef SKRANK_AGGREGATE_WEIGHTS_HPP_
#define SKRANK_AGGREGATE_WEIGHTS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <skrank/core/ground_truth.hpp>
#include <skrank/core/ranking.hpp>
#include <skrank/eval/metrics.hpp>

namespace skrank {

enum class WeightMetric { auc, ap_at_k };
enum class WeightScheme { plain, offset, log_odds };

std::string_view to_string(WeightMetric metric);
std::string_view to_string(WeightScheme scheme);
WeightMetric parse_weight_metric(std::string_view name);
WeightScheme parse_weight_scheme(std::string_view name);

struct RankerWeights {
    std::vector<double> weights;        // non-negative, sum to 1
    std::vector<double> metric_values;  // raw per-ranker metric on the training candidates
    std::vector<std::string> warnings;
};

struct WeightOptions {
    WeightMetric metric = WeightMetric::auc;
    WeightScheme scheme = WeightScheme::plain;
    std::size_t ap_k = 100;  // clamped to the number of training candidates
    ApDenominator ap_denominator = ApDenominator::min_k_positives;
};

/**
 * Scores each ranker on the candidates covered by `training_truth` (each
 * ranking is restricted to those ids first; nothing else is consulted) and
 * turns the scores into weights:
 *
 *   plain     w = metric
 *   offset    w = max(metric - 0.5, 0)
 *   log_odds  w = max(log(metric / (1 - metric)), 0), metric clamped to [1e-6, 1 - 1e-6]
 *
 * followed by normalisation to sum 1. An all-zero vector falls back to
 * uniform weights with a warning. Throws InvalidArgument when the training
 * candidates hold a single class.
 */
RankerWeights compute_ranker_weights(std::span<const Ranking> rankings, const GroundTruth &training_truth,
                                     const WeightOptions &options = {});

} // namespace skrank

#endif // SKRANK_AGGREGATE_WEIGHTS_HPP_

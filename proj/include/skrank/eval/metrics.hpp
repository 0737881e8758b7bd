#ifndef SKRANK_EVAL_METRICS_HPP_
#define SKRANK_EVAL_METRICS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include <skrank/core/ground_truth.hpp>
#include <skrank/core/ranking.hpp>

namespace skrank {

/// Probability that a random positive is ranked above a random negative,
/// over the candidates in `ranking`. Every ranked candidate must be labelled
/// in `truth` and both classes must be present (InvalidArgument otherwise).
double auc(const Ranking &ranking, const GroundTruth &truth);

enum class ApDenominator {
    min_k_positives,  // min(k, positives among the ranked candidates)
    k,
};

/**
 * Sum of precision@i over positions i <= k holding a positive, divided by
 * the chosen denominator. Positives are counted among the ranked candidates.
 * Requires 1 <= k <= ranking.size() and at least one positive.
 */
double average_precision_at_k(const Ranking &ranking, const GroundTruth &truth, std::size_t k,
                              ApDenominator denominator = ApDenominator::min_k_positives);

/// 1 - 6 sum(d^2) / (m (m^2 - 1)) over position differences; m >= 2.
double spearman(const Ranking &a, const Ranking &b);

/// ROC points from (0,0) to (1,1), one step per ranked candidate.
struct RocCurve {
    std::vector<double> false_positive_rate;
    std::vector<double> true_positive_rate;
};
RocCurve roc_curve(const Ranking &ranking, const GroundTruth &truth);

struct MetricSummary {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation; 0 for a single value
    double min = 0.0;
    double max = 0.0;
    std::vector<double> per_trial;
};
MetricSummary summarize(std::span<const double> values);

} // namespace skrank

#endif // SKRANK_EVAL_METRICS_HPP_

#include <skrank/eval/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include <skrank/core/error.hpp>

namespace skrank {

namespace {

std::vector<bool> ranked_labels(const Ranking &ranking, const GroundTruth &truth) {
    std::vector<bool> labels;
    labels.reserve(ranking.size());
    for (const auto &id : ranking) {
        labels.push_back(truth.is_positive(id));
    }
    return labels;
}

} // namespace

double auc(const Ranking &ranking, const GroundTruth &truth) {
    const auto labels = ranked_labels(ranking, truth);
    // Walk from the bottom: each positive outranks every negative seen so far.
    double negatives_below = 0.0, concordant = 0.0, positives = 0.0;
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
        if (*it) {
            concordant += negatives_below;
            positives += 1.0;
        } else {
            negatives_below += 1.0;
        }
    }
    if (positives == 0.0 || negatives_below == 0.0) {
        throw InvalidArgument("auc: both classes must be present among the ranked candidates");
    }
    return concordant / (positives * negatives_below);
}

double average_precision_at_k(const Ranking &ranking, const GroundTruth &truth, std::size_t k,
                              ApDenominator denominator) {
    if (k == 0 || k > ranking.size()) {
        throw InvalidArgument("average_precision_at_k: k=" + std::to_string(k) + " outside [1, " +
                              std::to_string(ranking.size()) + "]");
    }
    const auto labels = ranked_labels(ranking, truth);
    const auto positives = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), true));
    if (positives == 0) {
        throw InvalidArgument("average_precision_at_k: no positives among the ranked candidates");
    }
    double sum = 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (labels[i]) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(i + 1);
        }
    }
    const std::size_t norm = denominator == ApDenominator::k ? k : std::min(k, positives);
    return sum / static_cast<double>(norm);
}

double spearman(const Ranking &a, const Ranking &b) {
    if (!a.is_total() || !b.is_total()) {
        throw InvalidArgument("spearman requires total orderings");
    }
    require_same_candidates(a, b, "spearman");
    const auto m = static_cast<double>(a.size());
    if (a.size() < 2) {
        throw InvalidArgument("spearman requires at least two candidates");
    }
    double sum_sq = 0.0;
    for (const auto &id : a) {
        const double d = static_cast<double>(a.position(id)) - static_cast<double>(b.position(id));
        sum_sq += d * d;
    }
    return 1.0 - 6.0 * sum_sq / (m * (m * m - 1.0));
}

RocCurve roc_curve(const Ranking &ranking, const GroundTruth &truth) {
    const auto labels = ranked_labels(ranking, truth);
    const auto positives = static_cast<double>(std::count(labels.begin(), labels.end(), true));
    const auto negatives = static_cast<double>(labels.size()) - positives;
    if (positives == 0.0 || negatives == 0.0) {
        throw InvalidArgument("roc_curve: both classes must be present among the ranked candidates");
    }
    RocCurve roc;
    roc.false_positive_rate.reserve(labels.size() + 1);
    roc.true_positive_rate.reserve(labels.size() + 1);
    roc.false_positive_rate.push_back(0.0);
    roc.true_positive_rate.push_back(0.0);
    double tp = 0.0, fp = 0.0;
    for (bool positive : labels) {
        (positive ? tp : fp) += 1.0;
        roc.false_positive_rate.push_back(fp / negatives);
        roc.true_positive_rate.push_back(tp / positives);
    }
    return roc;
}

MetricSummary summarize(std::span<const double> values) {
    MetricSummary s;
    s.per_trial.assign(values.begin(), values.end());
    if (values.empty()) {
        return s;
    }
    const auto n = static_cast<double>(values.size());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;
    // Guard against the mean drifting one ulp outside [min, max].
    s.mean = std::clamp(s.mean, s.min, s.max);
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / (n - 1.0));
    }
    return s;
}

} // namespace skrank

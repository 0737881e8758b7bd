#include <skrank/aggregate/weights.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include <skrank/core/error.hpp>

namespace skrank {

std::string_view to_string(WeightMetric metric) {
    return metric == WeightMetric::auc ? "auc" : "ap_at_k";
}

std::string_view to_string(WeightScheme scheme) {
    switch (scheme) {
    case WeightScheme::plain: return "plain";
    case WeightScheme::offset: return "offset";
    case WeightScheme::log_odds: return "log_odds";
    }
    return "?";
}

WeightMetric parse_weight_metric(std::string_view name) {
    if (name == "auc") return WeightMetric::auc;
    if (name == "ap_at_k" || name == "ap") return WeightMetric::ap_at_k;
    throw InvalidArgument("unknown weight metric '" + std::string(name) + "'");
}

WeightScheme parse_weight_scheme(std::string_view name) {
    if (name == "plain") return WeightScheme::plain;
    if (name == "offset") return WeightScheme::offset;
    if (name == "log_odds") return WeightScheme::log_odds;
    throw InvalidArgument("unknown weight scheme '" + std::string(name) + "'");
}

RankerWeights compute_ranker_weights(std::span<const Ranking> rankings, const GroundTruth &training_truth,
                                     const WeightOptions &options) {
    if (rankings.empty()) {
        throw InvalidArgument("compute_ranker_weights: empty ranker list");
    }
    if (training_truth.positive_count() == 0 || training_truth.negative_count() == 0) {
        throw InvalidArgument("compute_ranker_weights: training candidates contain a single class");
    }
    std::unordered_set<CandidateId> training_ids;
    for (const auto &r : training_truth.records()) {
        training_ids.insert(r.id);
    }

    RankerWeights out;
    out.metric_values.reserve(rankings.size());
    out.weights.reserve(rankings.size());
    for (std::size_t p = 0; p < rankings.size(); ++p) {
        const Ranking on_train = rankings[p].restricted_to(training_ids);
        if (on_train.size() != training_ids.size()) {
            throw InvalidArgument("compute_ranker_weights: ranking " + std::to_string(p) + " covers " +
                                  std::to_string(on_train.size()) + " of " + std::to_string(training_ids.size()) +
                                  " training candidates");
        }
        double value = 0.0;
        if (options.metric == WeightMetric::auc) {
            value = auc(on_train, training_truth);
        } else {
            const std::size_t k = std::min(options.ap_k, on_train.size());
            value = average_precision_at_k(on_train, training_truth, k, options.ap_denominator);
        }
        out.metric_values.push_back(value);

        double w = 0.0;
        switch (options.scheme) {
        case WeightScheme::plain:
            w = value;
            break;
        case WeightScheme::offset:
            w = std::max(value - 0.5, 0.0);
            break;
        case WeightScheme::log_odds: {
            const double v = std::clamp(value, 1e-6, 1.0 - 1e-6);
            w = std::max(std::log(v / (1.0 - v)), 0.0);
            break;
        }
        }
        out.weights.push_back(w);
    }

    const double total = std::accumulate(out.weights.begin(), out.weights.end(), 0.0);
    if (total > 0.0) {
        for (double &w : out.weights) w /= total;
    } else {
        out.warnings.push_back(std::string("all ranker weights are zero under the ") +
                               std::string(to_string(options.scheme)) + " scheme; using uniform weights");
        std::fill(out.weights.begin(), out.weights.end(), 1.0 / static_cast<double>(out.weights.size()));
    }
    return out;
}

} // namespace skrank

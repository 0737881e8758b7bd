#include <skrank/eval/logistic.hpp>

#include <cmath>
#include <numeric>

#include <skrank/core/error.hpp>

namespace skrank {

namespace {

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// Largest eigenvalue of Z^T Z (Z with a leading column of ones) by power iteration.
double gram_spectral_norm(const std::vector<std::vector<double>> &z) {
    const std::size_t d = z.empty() ? 0 : z.front().size();
    std::vector<double> v(d + 1, 1.0), next(d + 1);
    double lambda = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        for (const auto &row : z) {
            double dot = v[0];
            for (std::size_t j = 0; j < d; ++j) dot += row[j] * v[j + 1];
            next[0] += dot;
            for (std::size_t j = 0; j < d; ++j) next[j + 1] += row[j] * dot;
        }
        const double norm = std::sqrt(std::inner_product(next.begin(), next.end(), next.begin(), 0.0));
        if (norm == 0.0) {
            return 0.0;
        }
        const double prev = lambda;
        lambda = norm / std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        for (std::size_t j = 0; j <= d; ++j) v[j] = next[j] / norm;
        if (std::abs(lambda - prev) <= 1e-9 * lambda) {
            break;
        }
    }
    return lambda;
}

} // namespace

LogisticModel::LogisticModel(std::size_t features)
    : coefficients_(features, 0.0), means_(features, 0.0), scales_(features, 1.0) {}

double LogisticModel::predict(std::span<const double> raw_features) const {
    if (raw_features.size() != coefficients_.size()) {
        throw InvalidArgument("LogisticModel::predict: expected " + std::to_string(coefficients_.size()) +
                              " features, got " + std::to_string(raw_features.size()));
    }
    double z = intercept_;
    for (std::size_t j = 0; j < coefficients_.size(); ++j) {
        z += coefficients_[j] * (raw_features[j] - means_[j]) / scales_[j];
    }
    return sigmoid(z);
}

LogisticModel fit_logistic(const std::vector<std::vector<double>> &rows, const std::vector<int> &labels,
                           const LogisticOptions &options) {
    if (rows.size() != labels.size() || rows.empty()) {
        throw InvalidArgument("fit_logistic: need one label per row and at least one row");
    }
    const std::size_t n = rows.size();
    const std::size_t d = rows.front().size();
    LogisticModel model(d);
    for (const auto &row : rows) {
        if (row.size() != d) {
            throw InvalidArgument("fit_logistic: ragged feature rows");
        }
    }

    for (std::size_t j = 0; j < d; ++j) {
        double mean = 0.0;
        for (const auto &row : rows) mean += row[j];
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (const auto &row : rows) var += (row[j] - mean) * (row[j] - mean);
        const double sd = std::sqrt(var / static_cast<double>(n));
        model.means_[j] = mean;
        model.scales_[j] = sd > 0.0 ? sd : 1.0;
    }
    std::vector<std::vector<double>> z(n, std::vector<double>(d));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            z[i][j] = (rows[i][j] - model.means_[j]) / model.scales_[j];
        }
    }

    const double lipschitz = 0.25 * gram_spectral_norm(z) + options.l2_penalty;
    const double step = 1.0 / lipschitz;
    std::vector<double> &w = model.coefficients_;
    double &b = model.intercept_;
    std::vector<double> grad(d);
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        std::fill(grad.begin(), grad.end(), 0.0);
        double grad_b = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double logit = b;
            for (std::size_t j = 0; j < d; ++j) logit += w[j] * z[i][j];
            const double residual = static_cast<double>(labels[i]) - sigmoid(logit);
            grad_b += residual;
            for (std::size_t j = 0; j < d; ++j) grad[j] += residual * z[i][j];
        }
        double norm_sq = grad_b * grad_b;
        for (std::size_t j = 0; j < d; ++j) {
            grad[j] -= options.l2_penalty * w[j];
            norm_sq += grad[j] * grad[j];
        }
        model.iterations_ = iter + 1;
        if (std::sqrt(norm_sq) / static_cast<double>(n) < options.gradient_tolerance) {
            model.converged_ = true;
            break;
        }
        b += step * grad_b;
        for (std::size_t j = 0; j < d; ++j) w[j] += step * grad[j];
    }
    return model;
}

LogisticBaseline logistic_regression_baseline(std::span<const ScoreVector> features, const GroundTruth &truth,
                                              std::span<const CandidateId> train,
                                              std::span<const CandidateId> test, std::uint64_t seed,
                                              const LogisticOptions &options) {
    if (features.size() < 2) {
        throw InvalidArgument("logistic_regression_baseline: need at least two score vectors");
    }
    auto row_of = [&](const CandidateId &id) {
        std::vector<double> row;
        row.reserve(features.size());
        for (const auto &f : features) row.push_back(f.at(id));
        return row;
    };
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    rows.reserve(train.size());
    labels.reserve(train.size());
    for (const auto &id : train) {
        rows.push_back(row_of(id));
        labels.push_back(truth.is_positive(id) ? 1 : 0);
    }
    const auto positives = std::accumulate(labels.begin(), labels.end(), 0);
    if (positives == 0 || positives == static_cast<int>(labels.size())) {
        throw InvalidArgument("logistic_regression_baseline: training ids must contain both classes");
    }

    LogisticBaseline out;
    out.model = fit_logistic(rows, labels, options);
    if (!out.model.converged()) {
        out.warnings.push_back("logistic regression stopped after " + std::to_string(out.model.iterations()) +
                               " iterations without reaching the gradient tolerance");
    }
    std::vector<std::pair<CandidateId, double>> scores;
    scores.reserve(test.size());
    for (const auto &id : test) {
        scores.emplace_back(id, out.model.predict(row_of(id)));
    }
    out.ranking = order_by_score(scores, seed);
    return out;
}

} // namespace skrank

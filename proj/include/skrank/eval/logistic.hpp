#ifndef SKRANK_EVAL_LOGISTIC_HPP_
#define SKRANK_EVAL_LOGISTIC_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <skrank/centrality/centrality.hpp>
#include <skrank/core/ground_truth.hpp>
#include <skrank/core/ranking.hpp>

namespace skrank {

struct LogisticOptions {
    double l2_penalty = 1e-4;
    int max_iterations = 20000;
    /// Stop once the gradient norm, divided by the number of training rows, drops below this.
    double gradient_tolerance = 1e-10;
};

/**
 * L2-penalised logistic regression on standardised features. Coefficients
 * live in the standardised space; `predict` applies the training means and
 * scales to raw feature rows. A default-constructed model (all-zero weights)
 * predicts 0.5 everywhere.
 */
class LogisticModel {
public:
    LogisticModel() = default;
    explicit LogisticModel(std::size_t features);

    double predict(std::span<const double> raw_features) const;

    std::size_t feature_count() const noexcept { return coefficients_.size(); }
    const std::vector<double> &coefficients() const noexcept { return coefficients_; }
    double intercept() const noexcept { return intercept_; }
    bool converged() const noexcept { return converged_; }
    int iterations() const noexcept { return iterations_; }

    friend LogisticModel fit_logistic(const std::vector<std::vector<double>> &, const std::vector<int> &,
                                      const LogisticOptions &);

private:
    std::vector<double> coefficients_;
    std::vector<double> means_;
    std::vector<double> scales_;
    double intercept_ = 0.0;
    bool converged_ = false;
    int iterations_ = 0;
};

/// Full-batch gradient ascent on the penalised log-likelihood (the intercept
/// is not penalised). `labels` are 0/1. Non-convergence is reported through
/// `converged()`, not thrown.
LogisticModel fit_logistic(const std::vector<std::vector<double>> &rows, const std::vector<int> &labels,
                           const LogisticOptions &options = {});

struct LogisticBaseline {
    Ranking ranking;  // over the test ids, most probable positive first
    LogisticModel model;
    std::vector<std::string> warnings;
};

/// Score fusion baseline: one feature per score vector, fitted on `train`,
/// ranking `test` by predicted probability with seeded tie-breaking.
LogisticBaseline logistic_regression_baseline(std::span<const ScoreVector> features, const GroundTruth &truth,
                                              std::span<const CandidateId> train,
                                              std::span<const CandidateId> test, std::uint64_t seed,
                                              const LogisticOptions &options = {});

} // namespace skrank

#endif // SKRANK_EVAL_LOGISTIC_HPP_

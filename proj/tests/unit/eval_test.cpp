#include <set>
#include <unordered_set>

#include <gtest/gtest.h>

#include <skrank/core/error.hpp>
#include <skrank/eval/logistic.hpp>
#include <skrank/eval/metrics.hpp>
#include <skrank/eval/split.hpp>

#include "support/oracles.hpp"

namespace skrank {
namespace {

// Candidates "a", "b", ... ranked in order, labelled by `pattern` ('+' or '-').
std::pair<Ranking, GroundTruth> labelled(const std::string &pattern) {
    const auto ids = testing::letter_ids(pattern.size());
    std::vector<std::pair<CandidateId, bool>> labels;
    for (std::size_t i = 0; i < ids.size(); ++i) labels.emplace_back(ids[i], pattern[i] == '+');
    return {Ranking(ids), GroundTruth::from_labels(labels)};
}

TEST(Auc, Examples) {
    auto [r1, t1] = labelled("++--");
    EXPECT_DOUBLE_EQ(auc(r1, t1), 1.0);
    auto [r2, t2] = labelled("--++");
    EXPECT_DOUBLE_EQ(auc(r2, t2), 0.0);
    auto [r3, t3] = labelled("+-+-");
    EXPECT_DOUBLE_EQ(auc(r3, t3), 0.75);
    auto [r4, t4] = labelled("+++");
    EXPECT_THROW(auc(r4, t4), InvalidArgument);
}

TEST(Auc, ReversalComplementsAndMatchesPairCount) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        std::string pattern(2 + trial % 30, '-');
        std::bernoulli_distribution coin(0.3);
        for (char &c : pattern) c = coin(rng) ? '+' : '-';
        pattern[0] = '+';
        pattern[1] = '-';
        std::shuffle(pattern.begin(), pattern.end(), rng);
        auto [ranking, truth] = labelled(pattern);
        EXPECT_EQ(auc(ranking, truth), testing::naive_auc(ranking, truth));
        EXPECT_NEAR(auc(ranking, truth) + auc(ranking.reversed(), truth), 1.0, 1e-12);
    }
}

TEST(Auc, InvariantUnderReorderingTheSeparatedEnds) {
    auto [ranking, truth] = labelled("+++-+--+---");
    auto order = ranking.order();
    std::reverse(order.begin(), order.begin() + 3);   // all-positive prefix
    std::reverse(order.end() - 3, order.end());       // all-negative suffix
    EXPECT_EQ(auc(Ranking(order), truth), auc(ranking, truth));
}

TEST(AveragePrecision, Examples) {
    auto [r1, t1] = labelled("++-+");
    EXPECT_DOUBLE_EQ(average_precision_at_k(r1, t1, 2), 1.0);
    auto [r2, t2] = labelled("+-+");
    EXPECT_NEAR(average_precision_at_k(r2, t2, 3), 5.0 / 6.0, 1e-15);
    auto [r3, t3] = labelled("---+");
    EXPECT_DOUBLE_EQ(average_precision_at_k(r3, t3, 3), 0.0);
    auto [r4, t4] = labelled("---");
    EXPECT_THROW(average_precision_at_k(r4, t4, 2), InvalidArgument);
    EXPECT_THROW(average_precision_at_k(r2, t2, 4), InvalidArgument);
    EXPECT_THROW(average_precision_at_k(r2, t2, 0), InvalidArgument);
}

TEST(AveragePrecision, DenominatorFlag) {
    auto [r, t] = labelled("+-+--");
    EXPECT_NEAR(average_precision_at_k(r, t, 4, ApDenominator::k), (1.0 + 2.0 / 3) / 4, 1e-15);
    EXPECT_NEAR(average_precision_at_k(r, t, 4, ApDenominator::min_k_positives), (1.0 + 2.0 / 3) / 2, 1e-15);
}

TEST(AveragePrecision, MatchesDirectFormulaAndMovingPositivesUpHelps) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        std::string pattern(2 + trial % 25, '-');
        std::bernoulli_distribution coin(0.4);
        for (char &c : pattern) c = coin(rng) ? '+' : '-';
        pattern[trial % pattern.size()] = '+';
        auto [ranking, truth] = labelled(pattern);
        const std::size_t k = 1 + trial % pattern.size();
        const double ap = average_precision_at_k(ranking, truth, k);
        EXPECT_EQ(ap, testing::naive_ap_at_k(ranking, truth, k, false));
        EXPECT_EQ(average_precision_at_k(ranking, truth, k, ApDenominator::k),
                  testing::naive_ap_at_k(ranking, truth, k, true));
        for (std::size_t i = 0; i < pattern.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (pattern[i] != '+' || pattern[j] != '-') continue;
                auto order = ranking.order();
                std::swap(order[i], order[j]);
                EXPECT_GE(average_precision_at_k(Ranking(order), truth, k), ap - 1e-15);
            }
        }
    }
}

TEST(Spearman, Examples) {
    const Ranking a = Ranking::of({"1", "2", "3", "4"});
    EXPECT_DOUBLE_EQ(spearman(a, a), 1.0);
    EXPECT_DOUBLE_EQ(spearman(a, a.reversed()), -1.0);
    EXPECT_NEAR(spearman(a, Ranking::of({"1", "3", "2", "4"})), 0.8, 1e-15);
    EXPECT_THROW(spearman(a, Ranking::of({"1", "2", "3", "5"})), InvalidArgument);
}

TEST(Spearman, EqualsPearsonOfPositions) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto ids = testing::letter_ids(2 + trial % 20);
        const Ranking a = testing::random_permutation(ids, rng);
        const Ranking b = testing::random_permutation(ids, rng);
        EXPECT_NEAR(spearman(a, b), testing::pearson_of_positions(a, b), 1e-12);
    }
}

TEST(RocCurve, EndpointsAndArea) {
    auto [r, t] = labelled("+-+-");
    const auto roc = roc_curve(r, t);
    ASSERT_EQ(roc.false_positive_rate.size(), 5u);
    EXPECT_EQ(roc.false_positive_rate.front(), 0.0);
    EXPECT_EQ(roc.true_positive_rate.back(), 1.0);
    double area = 0.0;
    for (std::size_t i = 1; i < roc.false_positive_rate.size(); ++i) {
        area += (roc.false_positive_rate[i] - roc.false_positive_rate[i - 1]) *
                (roc.true_positive_rate[i] + roc.true_positive_rate[i - 1]) / 2;
    }
    EXPECT_NEAR(area, 0.75, 1e-15);
}

TEST(Summary, MeanWithinRange) {
    const std::vector<double> values{0.1, 0.1, 0.1};
    const auto s = summarize(values);
    EXPECT_GE(s.mean, s.min);
    EXPECT_LE(s.mean, s.max);
    EXPECT_EQ(s.stddev, 0.0);
    const std::vector<double> spread{1, 2, 3, 4};
    EXPECT_NEAR(summarize(spread).stddev, std::sqrt(5.0 / 3.0), 1e-15);
}

GroundTruth class_sizes(std::size_t positives, std::size_t negatives) {
    std::vector<std::pair<CandidateId, bool>> labels;
    for (std::size_t i = 0; i < positives + negatives; ++i) {
        labels.emplace_back(CandidateId("n" + std::to_string(i)), i < positives);
    }
    return GroundTruth::from_labels(labels);
}

TEST(StratifiedSplit, ProportionalRounding) {
    const GroundTruth truth = class_sizes(10, 90);
    const auto splits = stratified_split(truth, SplitSpec{.train_fraction = 0.8, .trials = 3, .seed = 4});
    ASSERT_EQ(splits.size(), 3u);
    for (const auto &s : splits) {
        std::size_t pos = 0;
        for (const auto &id : s.train) pos += truth.is_positive(id) ? 1 : 0;
        EXPECT_EQ(pos, 8u);
        EXPECT_EQ(s.train.size() - pos, 72u);
        std::set<CandidateId> all(s.train.begin(), s.train.end());
        for (const auto &id : s.test) EXPECT_TRUE(all.insert(id).second);
        EXPECT_EQ(all.size(), truth.size());
    }
    EXPECT_NE(splits[0].train, splits[1].train);
}

TEST(StratifiedSplit, GuardsAndDeterminism) {
    const GroundTruth truth = class_sizes(3, 97);
    EXPECT_THROW(stratified_split(truth, SplitSpec{.train_fraction = 0.1}), InvalidArgument);
    EXPECT_THROW(stratified_split(truth, SplitSpec{.train_fraction = 1.2}), InvalidArgument);
    EXPECT_THROW(stratified_split(truth, SplitSpec{.train_fraction = 0.5, .trials = 0}), InvalidArgument);
    EXPECT_THROW(stratified_split(truth, SplitSpec{}), InvalidArgument);
    const SplitSpec spec{.train_fraction = 0.5, .trials = 2, .seed = 99};
    const auto a = stratified_split(truth, spec);
    const auto b = stratified_split(truth, spec);
    for (std::size_t t = 0; t < a.size(); ++t) {
        EXPECT_EQ(a[t].train, b[t].train);
        EXPECT_EQ(a[t].test, b[t].test);
    }
}

TEST(StratifiedSplit, TrainCount) {
    const GroundTruth truth = class_sizes(20, 80);
    const auto splits = stratified_split(truth, SplitSpec{.train_count = 25, .seed = 1});
    EXPECT_EQ(splits[0].train.size(), 25u);
    EXPECT_EQ(splits[0].test.size(), 75u);
}

TEST(Logistic, UntrainedModelPredictsOneHalf) {
    const LogisticModel model(3);
    const std::vector<double> row{1.0, -2.0, 5.0};
    EXPECT_DOUBLE_EQ(model.predict(row), 0.5);
}

TEST(Logistic, SeparableOneDimensionalData) {
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    for (int i = 0; i < 20; ++i) {
        rows.push_back({static_cast<double>(i)});
        labels.push_back(i >= 10 ? 1 : 0);
    }
    const auto model = fit_logistic(rows, labels);
    EXPECT_GT(model.coefficients()[0], 0.0);
    const std::vector<double> low{2.0}, high{17.0};
    EXPECT_LT(model.predict(low), 0.5);
    EXPECT_GT(model.predict(high), 0.5);
}

ScoreVector feature(const std::string &name, const std::vector<double> &values) {
    std::vector<std::pair<CandidateId, double>> entries;
    for (std::size_t i = 0; i < values.size(); ++i) entries.emplace_back(CandidateId("n" + std::to_string(i)), values[i]);
    return ScoreVector(name, entries);
}

TEST(Logistic, BaselineRanksSeparableTestSetPerfectly) {
    const std::size_t n = 40;
    std::vector<double> signal(n), noise(n);
    std::vector<std::pair<CandidateId, bool>> labels;
    std::mt19937_64 rng(5);
    std::normal_distribution<double> gauss;
    for (std::size_t i = 0; i < n; ++i) {
        const bool pos = i % 4 == 0;
        signal[i] = (pos ? 10.0 : 0.0) + gauss(rng);
        noise[i] = gauss(rng);
        labels.emplace_back(CandidateId("n" + std::to_string(i)), pos);
    }
    const GroundTruth truth = GroundTruth::from_labels(labels);
    const std::vector<ScoreVector> features{feature("signal", signal), feature("noise", noise)};
    const auto splits = stratified_split(truth, SplitSpec{.train_fraction = 0.5, .seed = 3});
    const auto baseline = logistic_regression_baseline(features, truth, splits[0].train, splits[0].test, 7);
    EXPECT_EQ(baseline.ranking.size(), splits[0].test.size());
    EXPECT_GT(baseline.model.coefficients()[0], 0.0);
    const std::unordered_set<CandidateId> test_ids(splits[0].test.begin(), splits[0].test.end());
    EXPECT_DOUBLE_EQ(auc(baseline.ranking, truth.subset(test_ids)), 1.0);
}

TEST(Logistic, DuplicatedFeatureLeavesPredictionsUnchanged) {
    std::mt19937_64 rng(6);
    std::normal_distribution<double> gauss;
    std::vector<std::vector<double>> single, doubled;
    std::vector<int> labels;
    for (int i = 0; i < 60; ++i) {
        const double x = gauss(rng);
        const double y = gauss(rng);
        // Overlapping classes keep the optimum finite.
        labels.push_back(x + 0.8 * gauss(rng) > 0 ? 1 : 0);
        single.push_back({x, y});
        doubled.push_back({x, y, x});
    }
    // The penalty splits weight across copies, so only the unpenalized fit is invariant.
    const LogisticOptions unpenalized{.l2_penalty = 0.0};
    const auto a = fit_logistic(single, labels, unpenalized);
    const auto b = fit_logistic(doubled, labels, unpenalized);
    EXPECT_TRUE(a.converged());
    EXPECT_TRUE(b.converged());
    for (std::size_t i = 0; i < single.size(); ++i) {
        EXPECT_NEAR(a.predict(single[i]), b.predict(doubled[i]), 1e-6);
    }
}

TEST(Logistic, BaselinePreconditions) {
    const std::vector<double> v{1, 2, 3, 4};
    const std::vector<ScoreVector> one{feature("x", v)};
    const std::vector<ScoreVector> two{feature("x", v), feature("y", v)};
    const GroundTruth truth = class_sizes(2, 2);  // n0, n1 positive
    const std::vector<CandidateId> train{CandidateId("n0"), CandidateId("n2")};
    const std::vector<CandidateId> test{CandidateId("n1"), CandidateId("n3")};
    EXPECT_THROW(logistic_regression_baseline(one, truth, train, test, 0), InvalidArgument);
    const std::vector<CandidateId> one_class{CandidateId("n0"), CandidateId("n1")};
    EXPECT_THROW(logistic_regression_baseline(two, truth, one_class, test, 0), InvalidArgument);
    EXPECT_NO_THROW(logistic_regression_baseline(two, truth, train, test, 0));
}

} // namespace
} // namespace skrank

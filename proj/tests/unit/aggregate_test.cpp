#include <gtest/gtest.h>

#include <skrank/aggregate/aggregate.hpp>
#include <skrank/aggregate/weights.hpp>
#include <skrank/core/ecc.hpp>
#include <skrank/core/error.hpp>
#include <skrank/core/kendall.hpp>
#include <skrank/core/majority_table.hpp>

#include "support/oracles.hpp"

namespace skrank {
namespace {

std::vector<Ranking> three_rankings() {
    return {Ranking::of({"a", "b", "c"}), Ranking::of({"b", "c", "a"}), Ranking::of({"b", "a", "c"})};
}

struct Instance {
    std::vector<Ranking> rankings;
    std::vector<double> weights;
    Ranking initial;
};

Instance random_instance(std::mt19937_64 &rng, std::size_t m, std::size_t r, bool random_weights) {
    const auto ids = testing::letter_ids(m);
    Instance inst;
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    for (std::size_t p = 0; p < r; ++p) {
        inst.rankings.push_back(testing::random_permutation(ids, rng));
        inst.weights.push_back(random_weights ? weight(rng) : 1.0);
    }
    inst.initial = testing::random_permutation(ids, rng);
    return inst;
}

TEST(Borda, Examples) {
    const std::vector<Ranking> one{Ranking::of({"a", "b", "c"})};
    EXPECT_EQ(borda(one), Ranking::of({"a", "b", "c"}));

    const std::vector<Ranking> three{Ranking::of({"a", "b", "c"}), Ranking::of({"b", "a", "c"}),
                                     Ranking::of({"a", "c", "b"})};
    const auto scores = borda_scores(three);
    std::map<std::string, double> by_id;
    for (const auto &[id, s] : scores) by_id[id.str()] = s;
    EXPECT_NEAR(by_id["a"], 5.0 / 3, 1e-12);
    EXPECT_NEAR(by_id["b"], 1.0, 1e-12);
    EXPECT_NEAR(by_id["c"], 1.0 / 3, 1e-12);
    EXPECT_EQ(borda(three), Ranking::of({"a", "b", "c"}));

    const std::vector<Ranking> same(4, Ranking::of({"d", "b", "a", "c"}));
    EXPECT_EQ(borda(same), Ranking::of({"d", "b", "a", "c"}));
    EXPECT_THROW(borda(std::vector<Ranking>{}), InvalidArgument);
}

TEST(Borda, AppendingAUniversalLastPlaceKeepsOrder) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        auto inst = random_instance(rng, 2 + trial % 8, 1 + trial % 6, false);
        std::vector<Ranking> extended;
        for (const auto &r : inst.rankings) {
            auto order = r.order();
            order.emplace_back("zz");
            extended.emplace_back(order);
        }
        const std::uint64_t seed = static_cast<std::uint64_t>(trial);
        const Ranking base = borda(inst.rankings, seed);
        const Ranking with_last = borda(extended, seed);
        EXPECT_EQ(with_last[with_last.size() - 1], CandidateId("zz"));
        EXPECT_EQ(with_last.restricted_to(base.candidate_set()), base);
    }
}

TEST(SupervisedBorda, Examples) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = random_instance(rng, 2 + trial % 8, 1 + trial % 6, false);
        const std::uint64_t seed = static_cast<std::uint64_t>(trial);
        EXPECT_EQ(supervised_borda(inst.rankings, inst.weights, seed), borda(inst.rankings, seed));
    }

    const std::vector<Ranking> pair{Ranking::of({"a", "b"}), Ranking::of({"b", "a"})};
    const std::vector<double> dictator{1, 0};
    EXPECT_EQ(supervised_borda(pair, dictator), Ranking::of({"a", "b"}));

    // Weighted scores with m - position: a = 10*2 + 1 + 1 = 22, b = 10*1 + 2 + 2 = 14, c = 0.
    const std::vector<Ranking> three{Ranking::of({"a", "b", "c"}), Ranking::of({"b", "a", "c"}),
                                     Ranking::of({"b", "a", "c"})};
    const std::vector<double> heavy{10, 1, 1};
    EXPECT_EQ(supervised_borda(three, heavy), Ranking::of({"a", "b", "c"}));

    const std::vector<double> zeros{0, 0};
    EXPECT_THROW(supervised_borda(pair, zeros), InvalidArgument);
}

TEST(Skr, Examples) {
    const auto rankings = three_rankings();
    const Ranking initial = Ranking::of({"a", "b", "c"});
    const std::vector<double> unit{1, 1, 1};
    EXPECT_EQ(skr(rankings, unit, 3, initial), Ranking::of({"b", "a", "c"}));
    const std::vector<double> supervised{0.9, 0.3, 0.3};
    EXPECT_EQ(skr(rankings, supervised, 3, initial), Ranking::of({"a", "b", "c"}));

    const std::vector<Ranking> single{Ranking::of({"d", "a", "c", "b"})};
    const std::vector<double> one{1};
    for (const auto &start : {Ranking::of({"a", "b", "c", "d"}), Ranking::of({"b", "c", "d", "a"})}) {
        EXPECT_EQ(skr(single, one, 4, start), single[0]);
    }
}

TEST(Skr, ZeroMassPairsKeepInitialOrder) {
    // k = 1 yields an empty table, so the initial ordering is returned as is.
    const auto rankings = three_rankings();
    const std::vector<double> unit{1, 1, 1};
    const Ranking initial = Ranking::of({"c", "a", "b"});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        EXPECT_EQ(skr(rankings, unit, 1, initial, seed), initial);
        EXPECT_EQ(skr(rankings, unit, 1, initial, seed, SortKind::bubble), initial);
    }
}

TEST(Skr, RejectsBrokenPreconditions) {
    const auto rankings = three_rankings();
    const std::vector<double> unit{1, 1, 1};
    EXPECT_THROW(skr(rankings, unit, 4, Ranking::of({"a", "b", "c"})), InvalidArgument);
    EXPECT_THROW(skr(rankings, unit, 3, Ranking::of({"a", "b"})), InvalidArgument);
    EXPECT_THROW(skr(rankings, std::vector<double>{1, 1}, 3, Ranking::of({"a", "b", "c"})), InvalidArgument);
    EXPECT_THROW(skr(rankings, std::vector<double>{1, -1, 1}, 3, Ranking::of({"a", "b", "c"})), InvalidArgument);
}

TEST(KemenyQuicksort, Examples) {
    const std::vector<Ranking> rankings{Ranking::of({"a", "b", "c"}), Ranking::of({"a", "b", "c"}),
                                        Ranking::of({"c", "b", "a"})};
    EXPECT_EQ(kemeny_quicksort(rankings, 3, Ranking::of({"c", "a", "b"})), Ranking::of({"a", "b", "c"}));
}

TEST(KemenyQuicksort, EqualsSkrWithUnitWeights) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = 2 + trial % 12;
        auto inst = random_instance(rng, m, 1 + trial % 7, false);
        const std::size_t k = 1 + trial % m;
        const std::uint64_t seed = static_cast<std::uint64_t>(trial);
        EXPECT_EQ(kemeny_quicksort(inst.rankings, k, inst.initial, seed),
                  skr(inst.rankings, inst.weights, k, inst.initial, seed));
    }
}

TEST(LocalKemenization, Examples) {
    const std::vector<Ranking> unanimous(3, Ranking::of({"a", "b", "c"}));
    const std::vector<double> unit{1, 1, 1};
    EXPECT_EQ(local_kemenization(unanimous, unit, 3, Ranking::of({"c", "b", "a"})), Ranking::of({"a", "b", "c"}));
    EXPECT_EQ(local_kemenization(three_rankings(), unit, 3, Ranking::of({"a", "b", "c"})),
              skr(three_rankings(), unit, 3, Ranking::of({"a", "b", "c"})));
}

TEST(LocalKemenization, MatchesQuickSortOnTransitiveTournaments) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 2 + trial % 9;
        // An odd number of rankers with unit weights and k = m gives a tournament
        // without ties; keep only the transitive ones.
        auto inst = random_instance(rng, m, 2 * (trial % 3) + 1, false);
        const auto table = build_majority_table(inst.rankings, inst.weights, m);
        const Ranking quick = skr(inst.rankings, inst.weights, m, inst.initial, static_cast<std::uint64_t>(trial));
        const auto ecc = ecc_check(quick, table);
        const bool transitive = std::all_of(ecc.blocks.begin(), ecc.blocks.end(),
                                            [](const auto &block) { return block.size() == 1; });
        if (!transitive) continue;
        EXPECT_EQ(local_kemenization(inst.rankings, inst.weights, m, inst.initial), quick);
    }
}

TEST(AggregationProperties, LocallyKemenyOptimalAndEcc) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = 2 + trial % 9;
        const std::size_t r = std::array<std::size_t, 3>{3, 5, 7}[trial % 3];
        auto inst = random_instance(rng, m, r, false);
        const auto table = build_majority_table(inst.rankings, inst.weights, m);
        for (auto kind : {SortKind::quick, SortKind::bubble}) {
            const Ranking out =
                skr(inst.rankings, inst.weights, m, inst.initial, static_cast<std::uint64_t>(trial), kind);
            EXPECT_TRUE(testing::naive_locally_kemeny_optimal(out, inst.rankings)) << out;
            EXPECT_TRUE(ecc_check(out, table).passed()) << out;
        }
    }
}

TEST(AggregationProperties, WeightedOutputsSatisfyEccOfTheirTable) {
    std::mt19937_64 rng(78);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = 2 + trial % 9;
        auto inst = random_instance(rng, m, 1 + trial % 6, true);
        const std::size_t k = 1 + trial % m;
        const auto table = build_majority_table(inst.rankings, inst.weights, k);
        const auto naive = testing::naive_majority(inst.rankings, inst.weights, k);
        for (auto kind : {SortKind::quick, SortKind::bubble}) {
            const Ranking out =
                skr(inst.rankings, inst.weights, k, inst.initial, static_cast<std::uint64_t>(trial), kind);
            EXPECT_TRUE(ecc_check(out, table).passed());
            EXPECT_TRUE(testing::naive_ecc_holds(out, naive));
        }
    }
}

TEST(AggregationProperties, Unanimity) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 2 + trial % 10;
        const Ranking truth = testing::random_permutation(testing::letter_ids(m), rng);
        const std::vector<Ranking> rankings(1 + trial % 5, truth);
        for (auto method : {AggregationMethod::borda, AggregationMethod::supervised_borda,
                            AggregationMethod::local_kemenization, AggregationMethod::kemeny_quicksort,
                            AggregationMethod::skr}) {
            AggregationSpec spec;
            spec.method = method;
            spec.top_k = TopK::all();
            spec.initial = testing::random_permutation(testing::letter_ids(m), rng);
            spec.seed = static_cast<std::uint64_t>(trial);
            EXPECT_EQ(aggregate(rankings, spec), truth) << to_string(method);
        }
    }
}

TEST(AggregationProperties, DictatorWeightReproducesFirstRanker) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 2 + trial % 10;
        auto inst = random_instance(rng, m, 2 + trial % 5, false);
        std::fill(inst.weights.begin(), inst.weights.end(), 0.0);
        inst.weights[0] = 1.0;
        const Ranking out = skr(inst.rankings, inst.weights, m, inst.initial, static_cast<std::uint64_t>(trial));
        EXPECT_EQ(kendall_tau(out, inst.rankings[0]), 0u);
    }
}

TEST(AggregationProperties, DeterministicAndScaleInvariant) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> scale(1e-6, 1e6);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 3 + trial % 20;
        auto inst = random_instance(rng, m, 2 + trial % 6, true);
        const std::size_t k = 1 + trial % m;
        const auto seed = static_cast<std::uint64_t>(trial);
        const Ranking out = skr(inst.rankings, inst.weights, k, inst.initial, seed);
        EXPECT_EQ(out, skr(inst.rankings, inst.weights, k, inst.initial, seed));
        auto scaled = inst.weights;
        const double c = scale(rng);
        for (double &w : scaled) w *= c;
        EXPECT_EQ(skr(inst.rankings, scaled, k, inst.initial, seed), out);
        EXPECT_EQ(supervised_borda(inst.rankings, scaled, seed), supervised_borda(inst.rankings, inst.weights, seed));
    }
}

TEST(AggregateDispatch, DefaultsAndParsing) {
    EXPECT_EQ(parse_aggregation_method("skr"), AggregationMethod::skr);
    EXPECT_EQ(parse_sort_kind("bubble"), SortKind::bubble);
    EXPECT_THROW(parse_aggregation_method("kemeny"), InvalidArgument);
    EXPECT_EQ(TopK::fraction(0.15).resolve(100), 15u);
    EXPECT_EQ(TopK::fraction(0.15).resolve(3), 1u);
    EXPECT_EQ(TopK::all().resolve(7), 7u);
    EXPECT_THROW(TopK::fraction(0.0), InvalidArgument);
    EXPECT_THROW(TopK::fraction(1.5), InvalidArgument);
    EXPECT_THROW(TopK::count(5).resolve(4), InvalidArgument);

    AggregationSpec spec;
    spec.top_k = TopK::all();
    spec.weights = {0.9, 0.3, 0.3};
    EXPECT_EQ(aggregate(three_rankings(), spec), Ranking::of({"a", "b", "c"}));
    spec.method = AggregationMethod::kemeny_quicksort;  // ignores the weights
    EXPECT_EQ(aggregate(three_rankings(), spec), Ranking::of({"b", "a", "c"}));
}

GroundTruth labels(std::initializer_list<std::pair<const char *, bool>> items) {
    std::vector<std::pair<CandidateId, bool>> v;
    for (const auto &[id, pos] : items) v.emplace_back(CandidateId(id), pos);
    return GroundTruth::from_labels(v);
}

TEST(RankerWeights, Examples) {
    const GroundTruth truth = labels({{"a", true}, {"b", false}, {"c", true}, {"d", false}});
    const std::vector<Ranking> same{Ranking::of({"a", "b", "c", "d"}), Ranking::of({"c", "d", "a", "b"})};
    const auto uniform = compute_ranker_weights(same, truth);
    EXPECT_NEAR(uniform.weights[0], 0.5, 1e-12);
    EXPECT_NEAR(uniform.weights[1], 0.5, 1e-12);

    // AUCs 0.9 and 0.6 need ten candidates: 2 positives x 5 negatives = 10 pairs.
    const GroundTruth wide = labels({{"p", true}, {"q", true}, {"n1", false}, {"n2", false}, {"n3", false},
                                     {"n4", false}, {"n5", false}});
    const std::vector<Ranking> two{Ranking::of({"p", "n1", "q", "n2", "n3", "n4", "n5"}),
                                   Ranking::of({"n1", "n2", "p", "q", "n3", "n4", "n5"})};
    const auto plain = compute_ranker_weights(two, wide);
    EXPECT_NEAR(plain.metric_values[0], 0.9, 1e-12);
    EXPECT_NEAR(plain.metric_values[1], 0.6, 1e-12);
    EXPECT_NEAR(plain.weights[0], 0.6, 1e-12);
    EXPECT_NEAR(plain.weights[1], 0.4, 1e-12);

    const std::vector<Ranking> coin{Ranking::of({"a", "b", "c", "d"}), Ranking::of({"a", "b", "d", "c"})};
    const auto offset = compute_ranker_weights(coin, truth, WeightOptions{.scheme = WeightScheme::offset});
    EXPECT_NEAR(offset.metric_values[1], 0.5, 1e-12);
    EXPECT_EQ(offset.weights[1], 0.0);
    EXPECT_EQ(offset.weights[0], 1.0);
}

TEST(RankerWeights, LogOddsAndUniformFallback) {
    const GroundTruth truth = labels({{"a", true}, {"b", false}, {"c", true}, {"d", false}});
    const std::vector<Ranking> rankings{Ranking::of({"a", "c", "b", "d"}), Ranking::of({"a", "b", "c", "d"})};
    const auto w = compute_ranker_weights(rankings, truth, WeightOptions{.scheme = WeightScheme::log_odds});
    // AUC 1 clamps to 1 - 1e-6; AUC 0.75 gives log 3.
    const double top = std::log((1 - 1e-6) / 1e-6);
    EXPECT_NEAR(w.weights[0], top / (top + std::log(3.0)), 1e-12);

    const std::vector<Ranking> bad{Ranking::of({"b", "d", "a", "c"}), Ranking::of({"d", "b", "c", "a"})};
    const auto fallback = compute_ranker_weights(bad, truth, WeightOptions{.scheme = WeightScheme::offset});
    EXPECT_EQ(fallback.weights, (std::vector<double>{0.5, 0.5}));
    EXPECT_FALSE(fallback.warnings.empty());
}

TEST(RankerWeights, OnlyTrainingCandidatesAreConsulted) {
    // The rankers disagree only on candidates outside the training labels.
    const GroundTruth train = labels({{"a", true}, {"b", false}});
    const std::vector<Ranking> v1{Ranking::of({"a", "x", "b", "y"}), Ranking::of({"a", "b", "x", "y"})};
    const std::vector<Ranking> v2{Ranking::of({"y", "a", "x", "b"}), Ranking::of({"x", "y", "a", "b"})};
    EXPECT_EQ(compute_ranker_weights(v1, train).weights, compute_ranker_weights(v2, train).weights);
    EXPECT_THROW(compute_ranker_weights(v1, labels({{"a", true}, {"b", true}})), InvalidArgument);
}

} // namespace
} // namespace skrank

#include <skrank/harness/synthetic.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <skrank/core/error.hpp>
#include <skrank/core/random.hpp>

namespace skrank {

std::vector<Ranking> generate_synthetic(const Ranking &truth_order, std::size_t rankers, double swap_prob,
                                        std::uint64_t seed) {
    if (!(swap_prob >= 0.0 && swap_prob < 0.5)) {
        throw InvalidArgument("generate_synthetic: swap_prob must lie in [0, 0.5)");
    }
    Rng rng(seed);
    std::bernoulli_distribution swap(swap_prob);
    std::vector<Ranking> out;
    out.reserve(rankers);
    for (std::size_t r = 0; r < rankers; ++r) {
        std::vector<CandidateId> order = truth_order.order();
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            if (swap(rng)) {
                std::swap(order[i], order[i + 1]);
            }
        }
        out.emplace_back(std::move(order));
    }
    return out;
}

SyntheticDataset make_synthetic_dataset(const SyntheticStudy &study, std::uint64_t seed) {
    if (study.candidates < 2) {
        throw InvalidArgument("synthetic study needs at least two candidates");
    }
    if (!(study.positive_fraction > 0.0 && study.positive_fraction < 1.0)) {
        throw InvalidArgument("synthetic positive_fraction must lie in (0, 1)");
    }
    if (study.faithful + study.adversarial == 0) {
        throw InvalidArgument("synthetic study needs at least one ranker");
    }
    const std::size_t m = study.candidates;
    const int width = static_cast<int>(std::to_string(m).size());
    std::vector<CandidateId> ids;
    ids.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "c%0*zu", width, i + 1);
        ids.emplace_back(buf);
    }
    Rng rng(derive_seed(seed, 0));
    std::shuffle(ids.begin(), ids.end(), rng);

    SyntheticDataset data;
    data.truth_order = Ranking(ids);

    auto faithful = generate_synthetic(data.truth_order, study.faithful, study.swap_prob, derive_seed(seed, 1));
    auto adversarial =
        generate_synthetic(data.truth_order.reversed(), study.adversarial, study.swap_prob, derive_seed(seed, 2));
    for (std::size_t i = 0; i < faithful.size(); ++i) {
        data.ranker_names.push_back("faithful_" + std::to_string(i + 1));
        data.rankings.push_back(std::move(faithful[i]));
    }
    for (std::size_t i = 0; i < adversarial.size(); ++i) {
        data.ranker_names.push_back("adversarial_" + std::to_string(i + 1));
        data.rankings.push_back(std::move(adversarial[i]));
    }
    for (std::size_t p = 0; p < data.rankings.size(); ++p) {
        std::vector<std::pair<CandidateId, double>> scores;
        scores.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            scores.emplace_back(data.rankings[p][i], static_cast<double>(m - (i + 1)));
        }
        data.scores.emplace_back(data.ranker_names[p], std::move(scores));
    }

    const auto positives = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::lround(study.positive_fraction * static_cast<double>(m))));
    std::vector<std::pair<CandidateId, double>> values;
    values.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        values.emplace_back(ids[i], static_cast<double>(m - (i + 1)));
    }
    data.truth = GroundTruth::from_values(values, static_cast<double>(m - positives));
    return data;
}

} // namespace skrank

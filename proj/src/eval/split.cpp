#include <skrank/eval/split.hpp>

#include <algorithm>
#include <cmath>

#include <skrank/core/error.hpp>
#include <skrank/core/random.hpp>

namespace skrank {

namespace {

std::size_t train_share(std::size_t size, double fraction, const char *what) {
    const auto n = static_cast<std::size_t>(std::lround(fraction * static_cast<double>(size)));
    if (n == 0 || n >= size) {
        throw InvalidArgument(std::string("stratified_split: ") + what + " of size " + std::to_string(size) +
                              " is too small to split at fraction " + std::to_string(fraction));
    }
    return n;
}

} // namespace

std::vector<Split> stratified_split(const GroundTruth &truth, const SplitSpec &spec) {
    if (spec.train_fraction.has_value() == spec.train_count.has_value()) {
        throw InvalidArgument("stratified_split: set exactly one of train_fraction and train_count");
    }
    if (spec.trials < 1) {
        throw InvalidArgument("stratified_split: trials must be >= 1");
    }
    if (truth.positive_count() == 0 || truth.negative_count() == 0) {
        throw InvalidArgument("stratified_split: both classes need at least one member");
    }
    double fraction = 0.0;
    if (spec.train_fraction) {
        fraction = *spec.train_fraction;
    } else {
        fraction = static_cast<double>(*spec.train_count) / static_cast<double>(truth.size());
    }
    if (!(fraction > 0.0 && fraction < 1.0)) {
        throw InvalidArgument("stratified_split: training fraction must lie in (0, 1)");
    }

    std::vector<CandidateId> positives, negatives, everyone;
    for (const auto &r : truth.records()) {
        (r.positive ? positives : negatives).push_back(r.id);
        everyone.push_back(r.id);
    }

    std::vector<Split> splits;
    splits.reserve(static_cast<std::size_t>(spec.trials));
    for (int t = 0; t < spec.trials; ++t) {
        Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(t)));
        Split split;
        auto take = [&](std::vector<CandidateId> pool, std::size_t n) {
            std::shuffle(pool.begin(), pool.end(), rng);
            split.train.insert(split.train.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
            split.test.insert(split.test.end(), pool.begin() + static_cast<std::ptrdiff_t>(n), pool.end());
        };
        if (spec.stratified) {
            take(positives, train_share(positives.size(), fraction, "positive class"));
            take(negatives, train_share(negatives.size(), fraction, "negative class"));
        } else {
            take(everyone, train_share(everyone.size(), fraction, "candidate set"));
        }
        std::sort(split.train.begin(), split.train.end());
        std::sort(split.test.begin(), split.test.end());
        splits.push_back(std::move(split));
    }
    return splits;
}

} // namespace skrank

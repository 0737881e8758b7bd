#ifndef SKRANK_EVAL_SPLIT_HPP_
#define SKRANK_EVAL_SPLIT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <skrank/core/ground_truth.hpp>

namespace skrank {

struct SplitSpec {
    // Exactly one of the two must be set.
    std::optional<double> train_fraction{};
    std::optional<std::size_t> train_count{};
    int trials = 1;
    std::uint64_t seed = 0;
    bool stratified = true;
};

struct Split {
    std::vector<CandidateId> train;  // sorted by id
    std::vector<CandidateId> test;   // sorted by id
};

/**
 * One random train/test partition of the truth's candidates per trial.
 * Stratified splits take round(fraction * class size) of each class, so the
 * class proportions are preserved; a class whose share would round to zero,
 * or to the whole class, is an error. Trial t is determined by (seed, t).
 */
std::vector<Split> stratified_split(const GroundTruth &truth, const SplitSpec &spec);

} // namespace skrank

#endif // SKRANK_EVAL_SPLIT_HPP_

#ifndef SKRANK_HARNESS_SYNTHETIC_HPP_
#define SKRANK_HARNESS_SYNTHETIC_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <skrank/centrality/centrality.hpp>
#include <skrank/core/ground_truth.hpp>
#include <skrank/core/ranking.hpp>

namespace skrank {

/**
 * Noisy copies of `truth_order`. Each ranker starts from the truth and makes
 * one left-to-right pass over adjacent positions, swapping the pair at
 * (i, i+1) with probability `swap_prob`. An element moved right by a swap can
 * be swapped again at the next position. Requires 0 <= swap_prob < 0.5.
 */
std::vector<Ranking> generate_synthetic(const Ranking &truth_order, std::size_t rankers, double swap_prob,
                                        std::uint64_t seed);

struct SyntheticStudy {
    std::size_t candidates = 500;
    std::size_t faithful = 7;
    std::size_t adversarial = 6;
    double swap_prob = 0.1;
    double positive_fraction = 0.1;
};

/// Planted-order dataset: faithful rankers perturb the truth, adversarial
/// rankers perturb its reverse, labels mark the top `positive_fraction`.
struct SyntheticDataset {
    Ranking truth_order;
    std::vector<std::string> ranker_names;
    std::vector<Ranking> rankings;
    /// m - position per ranker, used as features by score-fusion baselines.
    std::vector<ScoreVector> scores;
    GroundTruth truth;
};

SyntheticDataset make_synthetic_dataset(const SyntheticStudy &study, std::uint64_t seed);

} // namespace skrank

#endif // SKRANK_HARNESS_SYNTHETIC_HPP_

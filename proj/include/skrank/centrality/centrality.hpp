#ifndef SKRANK_CENTRALITY_CENTRALITY_HPP_
#define SKRANK_CENTRALITY_CENTRALITY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <skrank/centrality/graph.hpp>
#include <skrank/core/ranking.hpp>

namespace skrank {

/// One centrality score per candidate, tagged with the metric that produced it.
class ScoreVector {
public:
    ScoreVector() = default;
    ScoreVector(std::string metric, std::vector<std::pair<CandidateId, double>> scores);

    const std::string &metric() const noexcept { return metric_; }
    const std::vector<std::pair<CandidateId, double>> &entries() const noexcept { return scores_; }
    std::size_t size() const noexcept { return scores_.size(); }
    bool empty() const noexcept { return scores_.empty(); }

    std::optional<double> find(const CandidateId &id) const;
    /// Throws InvalidArgument for unknown ids.
    double at(const CandidateId &id) const;

    /// Scores for exactly `candidates`, in that order; ids without a score get `missing`.
    ScoreVector select(std::span<const CandidateId> candidates, double missing = 0.0) const;

private:
    std::string metric_;
    std::vector<std::pair<CandidateId, double>> scores_;
    std::unordered_map<CandidateId, std::size_t> index_;
};

enum class Direction { in, out };

/// In- or out-degree. Unweighted counts edges; weighted sums edge weights.
ScoreVector degree(const Graph &graph, Direction direction, bool weighted);

struct PageRankOptions {
    double damping = 0.85;
    double tolerance = 1e-10;  // on the L1 change between iterates
    int max_iterations = 200;
};

/**
 * PageRank by power iteration with uniform teleportation. Transition
 * probabilities are proportional to out-edge weight; the mass of dangling
 * nodes is spread uniformly over all nodes. Scores sum to 1.
 *
 * Throws InvalidArgument unless 0 < damping < 1, and ConvergenceError
 * (carrying the last L1 residual) when max_iterations is exhausted.
 */
ScoreVector pagerank(const Graph &graph, const PageRankOptions &options = {});

struct HitsOptions {
    double tolerance = 1e-10;
    int max_iterations = 200;
};

struct HitsScores {
    ScoreVector hub;
    ScoreVector authority;
};

/// Kleinberg's hub/authority iteration, each vector L2-normalised per step.
/// Throws InvalidArgument for an edgeless graph and ConvergenceError when the
/// L1 change of either vector stays above tolerance.
HitsScores hits(const Graph &graph, const HitsOptions &options = {});

/// Descending-score ranking; equal scores are shuffled deterministically per seed.
Ranking ranking_from_scores(const ScoreVector &scores, std::uint64_t seed);

} // namespace skrank

#endif // SKRANK_CENTRALITY_CENTRALITY_HPP_

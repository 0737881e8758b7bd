#ifndef SKRANK_CORE_MAJORITY_TABLE_HPP_
#define SKRANK_CORE_MAJORITY_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <skrank/core/ranking.hpp>

namespace skrank {

/**
 * Pairwise weighted-preference accumulator: weight(i, j) is the total weight
 * of rankers that place i above j inside their top-k prefix.
 *
 * Entries are sparse and keyed by ordered pair; absent pairs weigh 0. Self
 * pairs are never stored. The covered candidate set is the union of every
 * candidate appearing anywhere in the input rankings, in first-seen order.
 */
class MajorityTable {
public:
    using Index = std::uint32_t;

    /// Margins within this fraction of a pair's total mass count as ties, so
    /// that rescaling all ranker weights cannot flip a comparison through
    /// floating-point rounding.
    static constexpr double kRelativeTieTolerance = 1e-12;

    struct Entry {
        CandidateId preferred;
        CandidateId other;
        double weight;
    };

    MajorityTable() = default;

    const std::vector<CandidateId> &candidates() const noexcept { return candidates_; }
    std::size_t candidate_count() const noexcept { return candidates_.size(); }
    std::optional<Index> index_of(const CandidateId &id) const;

    double weight(Index i, Index j) const;
    double weight(const CandidateId &i, const CandidateId &j) const;

    /// Sign of weight(i, j) - weight(j, i): +1 when i is preferred, -1 when j
    /// is preferred, 0 on a tie (including pairs with no mass at all).
    int compare(Index i, Index j) const;
    int compare(const CandidateId &i, const CandidateId &j) const;

    std::size_t entry_count() const noexcept { return weights_.size(); }
    bool empty() const noexcept { return weights_.empty(); }

    /// All stored entries ordered by (preferred, other) candidate index.
    std::vector<Entry> entries() const;

private:
    friend MajorityTable build_majority_table(std::span<const Ranking>, std::span<const double>,
                                              std::size_t);

    static std::uint64_t key(Index i, Index j) noexcept {
        return (static_cast<std::uint64_t>(i) << 32) | j;
    }

    std::vector<CandidateId> candidates_;
    std::unordered_map<CandidateId, Index> index_;
    std::unordered_map<std::uint64_t, double> weights_;
};

/**
 * For each ranking p and each pair of positions i < j <= k of its order,
 * adds weights[p] to the entry (p's i-th candidate, p's j-th candidate).
 *
 * Throws InvalidArgument on a weight count mismatch, a negative or non-finite
 * weight, k == 0, or k larger than the shortest ranking.
 */
MajorityTable build_majority_table(std::span<const Ranking> rankings, std::span<const double> weights,
                                   std::size_t k);

/// CSV dump `preferred,other,weight` with a header line, for debugging.
void write_majority_csv(std::ostream &out, const MajorityTable &table);

} // namespace skrank

#endif // SKRANK_CORE_MAJORITY_TABLE_HPP_

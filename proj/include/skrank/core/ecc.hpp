#ifndef SKRANK_CORE_ECC_HPP_
#define SKRANK_CORE_ECC_HPP_

#include <optional>
#include <vector>

#include <skrank/core/majority_table.hpp>
#include <skrank/core/ranking.hpp>

namespace skrank {

struct EccViolation {
    /// Weighted majority puts this candidate's block strictly above `placed_above`...
    CandidateId should_precede;
    /// ...yet the aggregate ranks this one higher.
    CandidateId placed_above;
};

struct EccResult {
    std::optional<EccViolation> violation;
    /// Dominance blocks, best first. Every member of an earlier block strictly
    /// beats every member of a later one under the table's weighted majority.
    std::vector<std::vector<CandidateId>> blocks;

    bool passed() const noexcept { return !violation.has_value(); }
    explicit operator bool() const noexcept { return passed(); }
};

/**
 * Extended Condorcet check of `aggregate` against `table`.
 *
 * Builds the relation "i does not strictly beat j" (a semicomplete digraph),
 * condenses its strongly connected components and orders them; the result is
 * the unique chain of dominance blocks. The aggregate passes iff it lists the
 * blocks contiguously in that order, which is equivalent to: no partition
 * {C, R} with every C-member strictly preferred to every R-member has an
 * R-member ranked above a C-member.
 *
 * `aggregate` must be a total ordering of exactly the table's candidates;
 * with an empty candidate set every aggregate passes.
 */
EccResult ecc_check(const Ranking &aggregate, const MajorityTable &table);

} // namespace skrank

#endif // SKRANK_CORE_ECC_HPP_
